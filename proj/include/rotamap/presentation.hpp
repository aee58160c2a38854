#ifndef ROTAMAP_PRESENTATION_HPP_
#define ROTAMAP_PRESENTATION_HPP_

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace rotamap {

  // The distinguished generator words of a presentation: rotations
  // (sigma_1, ...) of a chiral or rotary polytope, or the involutions
  // (rho_0, ...) of a regular C-group.
  struct Distinguished {
    enum class Kind { sigma, rho };

    Kind              kind = Kind::sigma;
    std::vector<Word> words;

    friend bool operator==(Distinguished const&, Distinguished const&)
        = default;
  };

  inline bool valid_generator_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      return false;
    }
    for (char c : name) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
        return false;
      }
    }
    return true;
  }

  // A finite presentation <generators | relators>. Relators are words equal
  // to the identity and are stored freely reduced.
  class Presentation {
   public:
    Presentation() = default;

    explicit Presentation(std::vector<std::string> const& names) {
      for (auto const& n : names) {
        add_generator(n);
      }
    }

    std::uint32_t add_generator(std::string const& name) {
      if (!valid_generator_name(name)) {
        throw ParseError(0, "invalid generator name '" + name + "'");
      }
      if (generator_index(name)) {
        throw ParseError(0, "duplicate generator name '" + name + "'");
      }
      _names.push_back(name);
      return static_cast<std::uint32_t>(_names.size() - 1);
    }

    void add_relator(Word const& w) {
      check_word(w);
      _relators.push_back(reduce(w));
    }

    void set_distinguished(Distinguished d) {
      auto n = d.words.size();
      if (d.kind == Distinguished::Kind::sigma && (n < 2 || n > 4)) {
        throw PreconditionError("sigma line needs 2 to 4 words, got "
                                + std::to_string(n));
      }
      if (d.kind == Distinguished::Kind::rho && (n < 3 || n > 4)) {
        throw PreconditionError("rho line needs 3 or 4 words, got "
                                + std::to_string(n));
      }
      for (auto& w : d.words) {
        check_word(w);
        w = reduce(w);
      }
      _distinguished = std::move(d);
    }

    std::size_t num_generators() const noexcept {
      return _names.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::optional<Distinguished> const& distinguished() const noexcept {
      return _distinguished;
    }

    std::optional<std::uint32_t> generator_index(std::string_view name) const {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == name) {
          return static_cast<std::uint32_t>(i);
        }
      }
      return std::nullopt;
    }

    // A fresh generator name based on `stem` not already in use.
    std::string fresh_name(std::string const& stem) const {
      if (!generator_index(stem)) {
        return stem;
      }
      for (int i = 1;; ++i) {
        auto candidate = stem + "_" + std::to_string(i);
        if (!generator_index(candidate)) {
          return candidate;
        }
      }
    }

    std::string to_string(Word const& w) const {
      return rotamap::to_string(w, _names);
    }

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    void check_word(Word const& w) const {
      if (w.generator_bound() > _names.size()) {
        throw PreconditionError("word refers to undeclared generator index "
                                + std::to_string(w.generator_bound() - 1));
      }
    }

    std::vector<std::string>     _names;
    std::vector<Word>            _relators;
    std::optional<Distinguished> _distinguished;
  };

  namespace detail {

    // Recursive-descent reader for the word grammar
    //   word := term+
    //   term := name ['^' int] | '(' word ')' ['^' int] | '1'
    class WordReader {
     public:
      WordReader(std::string_view text, Presentation const& p, std::size_t line)
          : _text(text), _p(p), _line(line) {}

      bool at_end() {
        skip_space();
        return _pos >= _text.size();
      }

      Word read_word(bool nested = false) {
        Word w;
        bool any = false;
        while (true) {
          skip_space();
          if (_pos >= _text.size() || peek() == ')' || peek() == '=') {
            break;
          }
          w *= read_term();
          any = true;
        }
        if (!any) {
          fail(nested ? "empty parenthesised word" : "expected a word");
        }
        return w;
      }

      Word read_term() {
        skip_space();
        Word base;
        char c = peek();
        if (c == '(') {
          ++_pos;
          base = read_word(true);
          skip_space();
          if (peek() != ')') {
            fail("missing ')'");
          }
          ++_pos;
        } else if (c == '1'
                   && (_pos + 1 >= _text.size()
                       || !std::isalnum(
                           static_cast<unsigned char>(_text[_pos + 1])))) {
          ++_pos;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
          auto start = _pos;
          while (_pos < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[_pos]))
                     || _text[_pos] == '_')) {
            ++_pos;
          }
          auto name = _text.substr(start, _pos - start);
          auto idx  = _p.generator_index(name);
          if (!idx) {
            fail("undeclared generator " + std::string(name));
          }
          base = Word::generator(*idx);
        } else {
          fail(std::string("unexpected character '") + c + "'");
        }
        skip_space();
        if (peek() == '^') {
          ++_pos;
          return power(base, read_int());
        }
        return base;
      }

      char peek() const {
        return _pos < _text.size() ? _text[_pos] : '\0';
      }

      void expect(char c) {
        skip_space();
        if (peek() != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

     private:
      long read_int() {
        skip_space();
        bool neg = false;
        if (peek() == '-' || peek() == '+') {
          neg = peek() == '-';
          ++_pos;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected an integer exponent");
        }
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + (peek() - '0');
          if (v > 1'000'000) {
            fail("exponent too large");
          }
          ++_pos;
        }
        return neg ? -v : v;
      }

      void skip_space() {
        while (_pos < _text.size()
               && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(_line, what);
      }

      std::string_view    _text;
      std::size_t         _pos = 0;
      Presentation const& _p;
      std::size_t         _line;
    };

    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

  }  // namespace detail

  // Parse a word over the generators of `p`, e.g. "(s1 s2)^2 s3^-1".
  inline Word parse_word(std::string_view text, Presentation const& p) {
    detail::WordReader r(text, p, 0);
    auto               w = r.read_word();
    if (!r.at_end()) {
      throw ParseError(0, "trailing input after word");
    }
    return reduce(w);
  }

  // Read the line-oriented presentation format:
  //
  //   # comment
  //   gens s1 s2 s3
  //   rel s1^4
  //   rel (s1 s2)^2
  //   rel s1 s2 = s2 s1        (stored as s1 s2 s1^-1 s2^-1)
  //   sigma s1 s2 s3           (or: rho r0 r1 r2 r3)
  //
  // Each top-level term of a sigma/rho line is one distinguished word; wrap
  // products in parentheses: `sigma d (s1 s2 d^-1)`.
  inline Presentation parse_presentation(std::string_view text) {
    Presentation p;
    bool         have_gens = false;
    std::size_t  line_no   = 0;
    std::size_t  pos       = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      auto line = text.substr(pos, end - pos);
      pos       = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = detail::trim(line);
      if (line.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto sp      = line.find_first_of(" \t");
      auto keyword = line.substr(0, sp);
      auto rest    = sp == std::string_view::npos ? std::string_view{}
                                                  : detail::trim(line.substr(sp));
      if (keyword == "gens") {
        if (have_gens) {
          throw ParseError(line_no, "second 'gens' line");
        }
        have_gens = true;
        std::istringstream in{std::string(rest)};
        std::string        name;
        while (in >> name) {
          if (!valid_generator_name(name)) {
            throw ParseError(line_no, "invalid generator name '" + name + "'");
          }
          if (p.generator_index(name)) {
            throw ParseError(line_no, "duplicate generator name '" + name + "'");
          }
          p.add_generator(name);
        }
        if (p.num_generators() == 0) {
          throw ParseError(line_no, "'gens' line declares no generators");
        }
      } else if (!have_gens) {
        throw ParseError(line_no, "first line must be 'gens'");
      } else if (keyword == "rel") {
        detail::WordReader r(rest, p, line_no);
        Word               lhs = r.read_word();
        if (r.peek() == '=') {
          r.expect('=');
          Word rhs = r.read_word();
          lhs      = lhs * invert(rhs);
        }
        if (!r.at_end()) {
          throw ParseError(line_no, "trailing input after relator");
        }
        p.add_relator(lhs);
      } else if (keyword == "sigma" || keyword == "rho") {
        if (p.distinguished()) {
          throw ParseError(line_no, "more than one sigma/rho line");
        }
        detail::WordReader r(rest, p, line_no);
        Distinguished      d;
        d.kind = keyword == "sigma" ? Distinguished::Kind::sigma
                                    : Distinguished::Kind::rho;
        while (!r.at_end()) {
          d.words.push_back(r.read_term());
        }
        try {
          p.set_distinguished(std::move(d));
        } catch (PreconditionError const& e) {
          throw ParseError(line_no, e.what());
        }
      } else {
        throw ParseError(line_no,
                         "unknown keyword '" + std::string(keyword) + "'");
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!have_gens) {
      throw ParseError(0, "missing 'gens' line");
    }
    return p;
  }

  // Inverse of parse_presentation (up to comments and whitespace).
  inline std::string serialize(Presentation const& p) {
    std::string out = "gens";
    for (auto const& n : p.names()) {
      out += ' ' + n;
    }
    out += '\n';
    for (auto const& r : p.relators()) {
      out += "rel " + p.to_string(r) + '\n';
    }
    if (auto const& d = p.distinguished()) {
      out += d->kind == Distinguished::Kind::sigma ? "sigma" : "rho";
      for (auto const& w : d->words) {
        bool single = !w.empty()
                      && std::all_of(w.begin(), w.end(),
                                     [&](Letter l) { return l == w[0]; });
        out += single ? ' ' + p.to_string(w) : " (" + p.to_string(w) + ")";
      }
      out += '\n';
    }
    return out;
  }

}  // namespace rotamap

#endif  // ROTAMAP_PRESENTATION_HPP_
