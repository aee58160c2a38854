#ifndef ROTAMAP_COSET_TABLE_HPP_
#define ROTAMAP_COSET_TABLE_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace rotamap {

  inline constexpr std::size_t default_coset_cap = 1'000'000;

  // Coset table of a subgroup. Row i is coset i, column 2g is generator g and
  // column 2g+1 its inverse. Coset 0 is the subgroup itself.
  class CosetTable {
   public:
    using coset_type                  = std::uint32_t;
    static constexpr coset_type undef = std::numeric_limits<coset_type>::max();

    CosetTable() = default;
    CosetTable(std::size_t rows, std::size_t cols)
        : _cols(cols), _data(rows * cols, undef) {}

    std::size_t num_rows() const noexcept {
      return _cols == 0 ? 0 : _data.size() / _cols;
    }
    std::size_t num_columns() const noexcept {
      return _cols;
    }
    coset_type get(std::size_t row, std::size_t col) const {
      return _data[row * _cols + col];
    }
    void set(std::size_t row, std::size_t col, coset_type v) {
      _data[row * _cols + col] = v;
    }
    void add_row() {
      _data.resize(_data.size() + _cols, undef);
    }

    bool complete() const noexcept {
      for (auto v : _data) {
        if (v == undef) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(CosetTable const&, CosetTable const&) = default;

   private:
    std::size_t             _cols = 0;
    std::vector<coset_type> _data;
  };

  namespace detail {

    // Felsch-style enumeration of the cosets of the trivial subgroup. New
    // cosets are defined at the first undefined entry, scanning rows then
    // columns in index order; every definition and deduction is followed by a
    // scan of all relator conjugates through the affected entry. Coincidences
    // are merged eagerly with union-find.
    class FelschEnumerator {
      using coset = CosetTable::coset_type;
      static constexpr coset undef = CosetTable::undef;

     public:
      FelschEnumerator(Presentation const& p, std::size_t cap)
          : _ncols(2 * p.num_generators()), _cap(cap), _by_first(_ncols) {
        for (auto const& r : p.relators()) {
          add_conjugates(cyclic_reduce(r));
          add_conjugates(cyclic_reduce(invert(r)));
        }
        new_coset();
      }

      CosetTable run() {
        std::size_t row = 0;
        while (true) {
          process_deductions();
          row = std::min(row, _first_hole);
          _first_hole = std::numeric_limits<std::size_t>::max();
          // next undefined entry in a live row
          std::size_t col = 0;
          bool        found = false;
          for (; row < _parent.size(); ++row) {
            if (_parent[row] != row) {
              continue;
            }
            for (col = 0; col < _ncols; ++col) {
              if (_table[row * _ncols + col] == undef) {
                found = true;
                break;
              }
            }
            if (found) {
              break;
            }
          }
          if (!found) {
            if (verify_all()) {
              break;
            }
            row = 0;
            continue;
          }
          coset c = new_coset();
          define(static_cast<coset>(row), col, c);
        }
        return compact();
      }

     private:
      void add_conjugates(Word const& w) {
        if (w.empty()) {
          return;
        }
        std::vector<std::uint32_t> cols;
        for (auto l : w) {
          cols.push_back(l.column());
        }
        for (std::size_t i = 0; i < cols.size(); ++i) {
          std::vector<std::uint32_t> rot(cols.begin() + i, cols.end());
          rot.insert(rot.end(), cols.begin(), cols.begin() + i);
          auto& bucket = _by_first[rot[0]];
          bool  dup    = false;
          for (auto const& b : bucket) {
            if (b == rot) {
              dup = true;
              break;
            }
          }
          if (!dup) {
            bucket.push_back(std::move(rot));
          }
        }
      }

      static std::uint32_t inv(std::uint32_t col) {
        return col ^ 1U;
      }

      coset& at(coset c, std::uint32_t col) {
        return _table[static_cast<std::size_t>(c) * _ncols + col];
      }

      coset new_coset() {
        if (_live + 1 > _cap || _parent.size() + 1 > 4 * _cap + 16) {
          throw CapExceeded(_live, _cap);
        }
        auto c = static_cast<coset>(_parent.size());
        _parent.push_back(c);
        _table.resize(_table.size() + _ncols, undef);
        ++_live;
        return c;
      }

      void define(coset c, std::uint32_t col, coset d) {
        at(c, col)      = d;
        at(d, inv(col)) = c;
        _deductions.push_back({c, col});
      }

      coset rep(coset c) {
        coset r = c;
        while (_parent[r] != r) {
          r = _parent[r];
        }
        while (_parent[c] != r) {
          coset next = _parent[c];
          _parent[c] = r;
          c          = next;
        }
        return r;
      }

      bool alive(coset c) const {
        return _parent[c] == c;
      }

      void merge(coset a, coset b, std::vector<coset>& queue) {
        coset x = rep(a), y = rep(b);
        if (x == y) {
          return;
        }
        if (x > y) {
          std::swap(x, y);
        }
        _parent[y] = x;
        queue.push_back(y);
        --_live;
      }

      void coincidence(coset a, coset b) {
        std::vector<coset> queue;
        merge(a, b, queue);
        for (std::size_t i = 0; i < queue.size(); ++i) {
          coset g = queue[i];
          for (std::uint32_t x = 0; x < _ncols; ++x) {
            coset d = at(g, x);
            if (d == undef) {
              continue;
            }
            at(g, x) = undef;
            if (at(d, inv(x)) == g) {
              at(d, inv(x)) = undef;
              _first_hole   = std::min<std::size_t>(_first_hole, d);
            }
            coset mu = rep(g), nu = rep(d);
            if (at(mu, x) != undef) {
              merge(nu, at(mu, x), queue);
            } else if (at(nu, inv(x)) != undef) {
              merge(mu, at(nu, inv(x)), queue);
            } else {
              at(mu, x)      = nu;
              at(nu, inv(x)) = mu;
              _deductions.push_back({mu, x});
            }
          }
        }
      }

      // Scan a relator conjugate at coset c without defining new cosets; a
      // single gap is filled as a deduction, a mismatch is a coincidence.
      void scan(coset c, std::vector<std::uint32_t> const& w) {
        coset       f = c;
        std::size_t i = 0;
        std::size_t j = w.size();
        while (i < j && at(f, w[i]) != undef) {
          f = at(f, w[i]);
          ++i;
        }
        if (i == j) {
          if (f != c) {
            coincidence(f, c);
          }
          return;
        }
        coset b = c;
        while (j > i && at(b, inv(w[j - 1])) != undef) {
          b = at(b, inv(w[j - 1]));
          --j;
        }
        if (j == i) {
          coincidence(f, b);
        } else if (j == i + 1) {
          define(f, w[i], b);
        }
      }

      void process_deductions() {
        while (!_deductions.empty()) {
          auto [c, x] = _deductions.back();
          _deductions.pop_back();
          if (!alive(c)) {
            continue;
          }
          for (auto const& w : _by_first[x]) {
            scan(c, w);
            if (!alive(c)) {
              break;
            }
          }
          if (!alive(c)) {
            continue;
          }
          coset d = at(c, x);
          if (d == undef || !alive(d)) {
            continue;
          }
          for (auto const& w : _by_first[inv(x)]) {
            scan(d, w);
            if (!alive(d)) {
              break;
            }
          }
        }
      }

      // Final pass over the closed table: every relator conjugate must close
      // at every live coset. Returns false if any coincidence was found.
      bool verify_all() {
        bool clean = true;
        for (coset c = 0; c < _parent.size(); ++c) {
          for (std::uint32_t x = 0; x < _ncols; ++x) {
            for (auto const& w : _by_first[x]) {
              if (!alive(c)) {
                break;
              }
              std::size_t before = _live;
              scan(c, w);
              if (_live != before) {
                clean = false;
              }
            }
          }
        }
        process_deductions();
        return clean;
      }

      // Renumber live cosets breadth-first from coset 0, columns in order.
      CosetTable compact() {
        std::vector<coset> order;
        std::vector<coset> newnum(_parent.size(), undef);
        order.push_back(0);
        newnum[0] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::uint32_t x = 0; x < _ncols; ++x) {
            coset d = at(order[i], x);
            if (newnum[d] == undef) {
              newnum[d] = static_cast<coset>(order.size());
              order.push_back(d);
            }
          }
        }
        CosetTable t(order.size(), _ncols);
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::uint32_t x = 0; x < _ncols; ++x) {
            t.set(i, x, newnum[at(order[i], x)]);
          }
        }
        return t;
      }

      struct Deduction {
        coset         c;
        std::uint32_t col;
      };

      std::size_t                                          _ncols;
      std::size_t                                          _cap;
      std::size_t                                          _live = 0;
      std::size_t _first_hole = std::numeric_limits<std::size_t>::max();
      std::vector<coset>                                   _parent;
      std::vector<coset>                                   _table;
      std::vector<Deduction>                               _deductions;
      std::vector<std::vector<std::vector<std::uint32_t>>> _by_first;
    };

  }  // namespace detail

  // Complete coset table of the trivial subgroup of the group presented by
  // `p`, i.e. the right regular representation. Rows are numbered
  // breadth-first from the identity, so the table depends only on the group
  // and the order of its generators.
  inline CosetTable enumerate_cosets(Presentation const& p,
                                     std::size_t cap = default_coset_cap) {
    if (p.num_generators() == 0) {
      throw PreconditionError("cannot enumerate a presentation with no generators");
    }
    return detail::FelschEnumerator(p, cap).run();
  }

}  // namespace rotamap

#endif  // ROTAMAP_COSET_TABLE_HPP_
