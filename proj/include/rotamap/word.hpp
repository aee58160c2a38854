#ifndef ROTAMAP_WORD_HPP_
#define ROTAMAP_WORD_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace rotamap {

  // One letter of a free-group word: generator index and exponent sign.
  struct Letter {
    std::uint32_t gen  = 0;
    bool          inv  = false;

    // Coset-table column of this letter: 2*gen for g, 2*gen+1 for g^-1.
    constexpr std::uint32_t column() const noexcept {
      return 2 * gen + (inv ? 1 : 0);
    }
    constexpr Letter inverse() const noexcept {
      return Letter{gen, !inv};
    }
    static constexpr Letter from_column(std::uint32_t col) noexcept {
      return Letter{col / 2, (col & 1) != 0};
    }
    constexpr int sign() const noexcept {
      return inv ? -1 : 1;
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter, Letter) = default;
  };

  constexpr Letter gen(std::uint32_t g) noexcept {
    return Letter{g, false};
  }
  constexpr Letter gen_inv(std::uint32_t g) noexcept {
    return Letter{g, true};
  }

  // A word in the free group. Words are stored as given; call `reduce` to
  // obtain the freely reduced form. The empty word is the identity.
  class Word {
   public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    static Word generator(std::uint32_t g) {
      return Word{gen(g)};
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }
    auto begin() const noexcept {
      return _letters.begin();
    }
    auto end() const noexcept {
      return _letters.end();
    }

    void push_back(Letter l) {
      _letters.push_back(l);
    }

    // Largest generator index used, plus one (0 for the empty word).
    std::uint32_t generator_bound() const noexcept {
      std::uint32_t n = 0;
      for (auto l : _letters) {
        n = std::max(n, l.gen + 1);
      }
      return n;
    }

    // Concatenation (not reduced).
    Word& operator*=(Word const& other) {
      _letters.insert(_letters.end(), other._letters.begin(),
                      other._letters.end());
      return *this;
    }
    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const&, Word const&) = default;

   private:
    std::vector<Letter> _letters;
  };

  // Freely reduced form; idempotent.
  inline Word reduce(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto l : w) {
      if (!out.empty() && out.back() == l.inverse()) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return Word(std::move(out));
  }

  inline Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  // w^k for any integer k, freely reduced.
  inline Word power(Word const& w, long k) {
    Word base = k < 0 ? invert(w) : w;
    Word out;
    for (long i = 0, n = k < 0 ? -k : k; i < n; ++i) {
      out *= base;
    }
    return reduce(out);
  }

  // Replace every letter (g, s) by images[g]^s, then reduce.
  inline Word substitute(Word const& w, std::span<Word const> images) {
    if (w.generator_bound() > images.size()) {
      throw PreconditionError("substitute: word uses generator "
                              + std::to_string(w.generator_bound() - 1)
                              + " but only " + std::to_string(images.size())
                              + " images were given");
    }
    Word out;
    for (auto l : w) {
      out *= l.inv ? invert(images[l.gen]) : images[l.gen];
    }
    return reduce(out);
  }

  // Cyclically reduced form: freely reduced with first letter not inverse to
  // the last.
  inline Word cyclic_reduce(Word const& w) {
    Word        r = reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == r[j - 1].inverse()) {
      ++i;
      --j;
    }
    return Word(std::vector<Letter>(r.begin() + i, r.begin() + j));
  }

  // Render with generator names, e.g. "s1 s2^-1". The empty word prints as
  // "1".
  inline std::string to_string(Word const& w,
                               std::span<std::string const> names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      auto run = static_cast<long>(j - i);
      if (!out.empty()) {
        out += ' ';
      }
      out += names[w[i].gen];
      long e = w[i].inv ? -run : run;
      if (e != 1) {
        out += '^' + std::to_string(e);
      }
      i = j;
    }
    return out;
  }

}  // namespace rotamap

#endif  // ROTAMAP_WORD_HPP_
