#ifndef ROTAMAP_TORUS_HPP_
#define ROTAMAP_TORUS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "presentation.hpp"
#include "rotary.hpp"
#include "word.hpp"

namespace rotamap {

  enum class TorusKind { t44, t36, t63 };

  inline std::string to_string(TorusKind k) {
    switch (k) {
      case TorusKind::t44:
        return "{4,4}";
      case TorusKind::t36:
        return "{3,6}";
      case TorusKind::t63:
        return "{6,3}";
    }
    return "?";
  }

  // The torus map {p,q}_(b,c).
  struct TorusFamily {
    TorusKind     kind = TorusKind::t44;
    std::uint32_t b    = 1;
    std::uint32_t c    = 0;

    std::size_t p() const {
      return kind == TorusKind::t44 ? 4 : kind == TorusKind::t36 ? 3 : 6;
    }
    std::size_t q() const {
      return kind == TorusKind::t44 ? 4 : kind == TorusKind::t36 ? 6 : 3;
    }
    // Regular exactly when c = 0 or b = c (or b = 0, the mirror of c = 0).
    bool expected_regular() const {
      return b == 0 || c == 0 || b == c;
    }
    std::string name() const {
      return to_string(kind) + "_(" + std::to_string(b) + ","
             + std::to_string(c) + ")";
    }

    friend bool operator==(TorusFamily const&, TorusFamily const&) = default;
  };

  inline void validate(TorusFamily const& t) {
    if (t.b == 0 && t.c == 0) {
      throw PreconditionError("torus map needs (b,c) != (0,0)");
    }
  }

  // Word for the translation of T_(b,c) through b steps along the base edge
  // direction and c steps along the next direction, in terms of the
  // rotations a1 (about the base face) and a2 (about the base vertex).
  //   {4,4}: unit translations a2^-1 a1 and a2 a1^-1 (90 degrees apart)
  //   {3,6}: unit translations a2^-3 a1 a2 and a2^-2 a1 (60 degrees apart,
  //          the second turned clockwise from the first)
  //   {6,3}: the {3,6} word of the dual, a1 -> a2^-1, a2 -> a1^-1
  inline Word torus_translation(TorusKind k, std::uint32_t b, std::uint32_t c,
                                Word const& a1, Word const& a2) {
    auto i = [](Word const& w) { return invert(w); };
    switch (k) {
      case TorusKind::t44:
        return reduce(power(i(a2) * a1, b) * power(a2 * i(a1), c));
      case TorusKind::t36:
        return reduce(power(i(a2) * i(a2) * i(a2) * a1 * a2, b)
                      * power(i(a2) * i(a2) * a1, c));
      case TorusKind::t63:
        return torus_translation(TorusKind::t36, b, c, i(a2), i(a1));
    }
    return {};
  }

  // Rotation-group presentation of {p,q}_(b,c) on generators s1, s2.
  inline Presentation torus_presentation(TorusFamily const& t) {
    validate(t);
    Presentation p({"s1", "s2"});
    Word const   s1 = Word::generator(0), s2 = Word::generator(1);
    p.add_relator(power(s1, static_cast<long>(t.p())));
    p.add_relator(power(s2, static_cast<long>(t.q())));
    p.add_relator(power(s1 * s2, 2));
    p.add_relator(torus_translation(t.kind, t.b, t.c, s1, s2));
    p.set_distinguished({Distinguished::Kind::sigma, {s1, s2}});
    return p;
  }

  // Concrete model of the torus map group: rotations of the plane tiling
  // composed with translations, taken modulo the lattice T_(b,c). Points use
  // integer coordinates in the basis (e1, e2) of the vertex lattice, scaled by
  // 6 so that face centres and edge midpoints are integral.
  class LatticeTorusGroup {
   public:
    using Vec = std::array<long, 2>;
    using Mat = std::array<long, 4>;  // row-major 2x2

    struct Element {
      Mat m;
      Vec v;  // x -> m x + v

      friend bool operator==(Element const&, Element const&) = default;
      friend auto operator<=>(Element const&, Element const&) = default;
    };

    static constexpr long scale = 6;

    explicit LatticeTorusGroup(TorusFamily const& t) : _t(t) {
      validate(t);
      // 90 or 60 degree rotation in the lattice basis.
      Mat r = t.kind == TorusKind::t44 ? Mat{0, -1, 1, 0} : Mat{0, -1, 1, 1};
      Vec const origin{0, 0};
      Vec const tri_centre{2, 2};  // (e1 + e2) / 3
      Vec const sq_centre{3, 3};   // (e1 + e2) / 2
      Element   rot_vertex, rot_face;
      switch (t.kind) {
        case TorusKind::t44:
          rot_face   = rotation(r, sq_centre);
          rot_vertex = rotation(r, origin);
          break;
        case TorusKind::t36:
          rot_face   = rotation(mul(r, r), tri_centre);
          rot_vertex = rotation(r, origin);
          break;
        case TorusKind::t63:
          // dual of {3,6}: s1 = (vertex rotation)^-1, s2 = (face rotation)^-1
          rot_face   = inverse(rotation(r, origin));
          rot_vertex = inverse(rotation(mul(r, r), tri_centre));
          break;
      }
      _raw  = {rot_face, rot_vertex};
      _gens = _raw;
      // T_(b,c) is spanned by a vector w and its rotation r w.
      // In the triangular case (b,c) counts steps along e2 and then e1, the
      // handedness matching the translation words above.
      long b = t.b, c = t.c;
      if (t.kind != TorusKind::t44) {
        std::swap(b, c);
      }
      Vec w{scale * b, scale * c};
      lattice_basis(w, apply(r, w));
      for (auto& g : _gens) {
        g = normalise(g);
      }
      // Base cells, in the orientation of the {3,6} or {4,4} tiling.
      _vertex = t.kind == TorusKind::t63 ? tri_centre : origin;
      _face   = t.kind == TorusKind::t44   ? sq_centre
                : t.kind == TorusKind::t36 ? tri_centre
                                           : origin;
    }

    Element const& sigma(std::size_t i) const {
      return _gens.at(i - 1);
    }

    Element identity() const {
      return Element{{1, 0, 0, 1}, {0, 0}};
    }

    // Right action: first a, then b.
    Element product(Element const& a, Element const& b) const {
      return normalise(Element{mul(b.m, a.m), add(apply(b.m, a.v), b.v)});
    }

    // Value of a word over (s1, s2).
    Element evaluate(Word const& w) const {
      Element x = identity();
      for (auto l : w) {
        Element g = _gens.at(l.gen);
        x         = product(x, l.inv ? normalise(inverse(g)) : g);
      }
      return x;
    }

    Vec reduce_point(Vec v) const {
      long k = floor_div(v[1], _h1[1]);
      v[0] -= k * _h1[0];
      v[1] -= k * _h1[1];
      v[0] = v[0] - floor_div(v[0], _h2[0]) * _h2[0];
      return v;
    }

    // All elements, by breadth-first closure from the identity.
    std::vector<Element> elements() const {
      std::set<Element>    seen{identity()};
      std::vector<Element> queue{identity()};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (auto const& g : _gens) {
          auto y = product(queue[i], g);
          if (seen.insert(y).second) {
            queue.push_back(y);
          }
        }
      }
      return queue;
    }

    // Number of distinct images of a point under the group, modulo T.
    std::size_t orbit_size(std::vector<Element> const& elts, Vec p) const {
      std::set<Vec> pts;
      for (auto const& e : elts) {
        pts.insert(reduce_point(add(apply(e.m, p), e.v)));
      }
      return pts.size();
    }

    Vec base_vertex() const {
      return _vertex;
    }
    Vec base_face() const {
      return _face;
    }
    // Centre of the half-turn s1 s2, which is x -> -x + v with fixed point
    // v/2. Composed without reduction so v is the true translation part.
    Vec base_edge() const {
      auto const& a = _raw[0];
      auto const& b = _raw[1];
      Vec         v = add(apply(b.m, a.v), b.v);
      return {v[0] / 2, v[1] / 2};
    }

   private:
    static Mat mul(Mat const& a, Mat const& b) {
      return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
              a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
    }
    static Vec apply(Mat const& a, Vec const& v) {
      return {a[0] * v[0] + a[1] * v[1], a[2] * v[0] + a[3] * v[1]};
    }
    static Vec add(Vec const& a, Vec const& b) {
      return {a[0] + b[0], a[1] + b[1]};
    }
    static Mat inverse_matrix(Mat const& a) {
      // rotations have determinant 1
      return {a[3], -a[1], -a[2], a[0]};
    }
    static Element inverse(Element const& e) {
      Mat mi = inverse_matrix(e.m);
      Vec v  = apply(mi, e.v);
      return Element{mi, {-v[0], -v[1]}};
    }
    // Rotation by matrix r about the point c: x -> r (x - c) + c.
    static Element rotation(Mat const& r, Vec const& c) {
      Vec rc = apply(r, c);
      return Element{r, {c[0] - rc[0], c[1] - rc[1]}};
    }
    static long floor_div(long a, long b) {
      long q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
      }
      return q;
    }

    Element normalise(Element e) const {
      e.v = reduce_point(e.v);
      return e;
    }

    // Echelon basis h1 = (x1, y1), h2 = (x2, 0) with y1, x2 > 0.
    void lattice_basis(Vec a, Vec b) {
      while (b[1] != 0) {
        long q = a[1] / b[1];
        a[0] -= q * b[0];
        a[1] -= q * b[1];
        std::swap(a, b);
      }
      if (a[1] < 0) {
        a = {-a[0], -a[1]};
      }
      if (b[0] < 0) {
        b = {-b[0], 0};
      }
      _h1 = a;
      _h2 = b;
    }

    TorusFamily          _t;
    std::vector<Element> _raw;
    std::vector<Element> _gens;
    Vec                  _h1{}, _h2{};
    Vec                  _vertex{}, _face{};
  };

  struct LatticeOracleResult {
    std::size_t order = 0;
    FVector     f_vector;
  };

  // Order and cell counts of {p,q}_(b,c) computed in the lattice model.
  inline LatticeOracleResult lattice_torus_oracle(TorusFamily const& t) {
    LatticeTorusGroup g(t);
    auto              elts = g.elements();
    LatticeOracleResult out;
    out.order    = elts.size();
    out.f_vector = FVector{g.orbit_size(elts, g.base_vertex()),
                           g.orbit_size(elts, g.base_edge()),
                           g.orbit_size(elts, g.base_face())};
    return out;
  }

  // Enumerated rotation group of the torus map, checked against the lattice
  // model.
  inline RotationGroup3 torus_map(TorusFamily const& t,
                                  std::size_t cap = default_coset_cap) {
    auto g      = enumerate(torus_presentation(t), cap);
    auto oracle = lattice_torus_oracle(t);
    if (g->order() != oracle.order) {
      throw ContractError("torus map " + t.name() + " has order "
                          + std::to_string(g->order())
                          + " but the lattice model has order "
                          + std::to_string(oracle.order));
    }
    return RotationGroup3(g, Word::generator(0), Word::generator(1));
  }

}  // namespace rotamap

#endif  // ROTAMAP_TORUS_HPP_
