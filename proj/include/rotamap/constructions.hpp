#ifndef ROTAMAP_CONSTRUCTIONS_HPP_
#define ROTAMAP_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "presentation.hpp"
#include "rotary.hpp"
#include "selfdual.hpp"
#include "torus.hpp"
#include "word.hpp"

namespace rotamap {

  namespace detail {

    inline void expect(bool ok, std::string const& what) {
      if (!ok) {
        throw ContractError("construction check failed: " + what);
      }
    }

    inline void expect_order(GeneratedGroup const& g, Word const& w,
                             std::size_t want, std::string const& name) {
      auto got = g.local_order(w);
      if (got != want) {
        throw ContractError("construction check failed: order of " + name
                            + " is " + std::to_string(got) + ", expected "
                            + std::to_string(want));
      }
    }

    // Presentation of `g` with extra relators given as local words. The
    // distinguished words must generate the presented group.
    inline Presentation with_relators(GeneratedGroup const&    g,
                                      std::vector<Word> const& local) {
      if (!g.is_whole()) {
        throw PreconditionError("the distinguished words must generate the "
                                "presented group to form a quotient");
      }
      Presentation p = g.rep().presentation();
      for (auto const& r : local) {
        p.add_relator(g.ambient(r));
      }
      return p;
    }

  }  // namespace detail

  // Chiral (or regular) map of type {4, 2q | p} from an improperly
  // self-dual group of type {p,q,p}: kappa1 = d, kappa2 = s1 s2 d^-1.
  inline RotationGroup3 pc_map_improper(ExtendedGroup const& e) {
    if (e.kind != DualityKind::improper) {
      throw PreconditionError("kappa construction needs an improper duality");
    }
    GeneratedGroup x(e.rep, {e.generators[0], e.generators[1], e.generators[2],
                             e.duality});
    RotationGroup4 base(e.rep, e.generators[0], e.generators[1],
                        e.generators[2]);
    std::size_t const p = base.local_order(s(0));
    std::size_t const q = base.local_order(s(1));

    Word const k1 = s(3), k2 = s(0) * s(1) * s_inv(3);
    auto const k1i = invert(k1), k2i = invert(k2);
    detail::expect_order(x, k1, 4, "kappa1");
    detail::expect_order(x, k2, 2 * q, "kappa2");
    detail::expect_order(x, k1 * k2, 2, "kappa1 kappa2");
    detail::expect_order(x, k1 * k2i, p, "kappa1 kappa2^-1");
    detail::expect(x.local_equal(s(0), k1i * k2), "s1 = kappa1^-1 kappa2");
    detail::expect(x.local_equal(s(1), k2i * k2i), "s2 = kappa2^-2");
    detail::expect(x.local_equal(s(2), k2 * k1i), "s3 = kappa2 kappa1^-1");
    detail::expect(x.local_equal(k2 * k2, s_inv(1)), "kappa2^2 = s2^-1");

    RotationGroup3 m(e.rep, x.ambient(k1), x.ambient(k2));
    detail::expect(m.is_whole(), "kappa1, kappa2 generate the extended group");
    detail::expect(check_polytopal3(m), "<kappa1> meets <kappa2> trivially");
    detail::expect(hole_length(m, 2) == p, "2-holes have length p");
    auto want = reflexible4(base) ? Chirality::regular : Chirality::chiral;
    detail::expect(classify3(m) == want,
                   std::string("map is ") + to_string(want));
    return m;
  }

  // Regular map of type {p, 2s} from a properly self-dual group:
  // (tau0, tau1, tau2) = (s1 s2 s3, s1 s2, w).
  inline RegularMap3 pc_map_proper(ExtendedGroup const& e) {
    if (e.kind != DualityKind::proper) {
      throw PreconditionError("tau construction needs a proper duality");
    }
    GeneratedGroup x(e.rep, {e.generators[0], e.generators[1], e.generators[2],
                             e.duality});
    RotationGroup4 base(e.rep, e.generators[0], e.generators[1],
                        e.generators[2]);
    std::size_t const p  = base.local_order(s(0));
    std::size_t const q  = base.local_order(s(1));
    auto const        pl = petrie4(base);

    Word const t0 = s(0) * s(1) * s(2), t1 = s(0) * s(1), t2 = s(3);
    detail::expect(x.local_equal(t0 * t2, t2 * t0), "tau0 tau2 = tau2 tau0");
    detail::expect_order(x, t0 * t1, p, "tau0 tau1");
    detail::expect_order(x, t1 * t2, 2 * pl.left, "tau1 tau2");
    detail::expect_order(x, t0 * t1 * t2, 2 * pl.right, "tau0 tau1 tau2");
    detail::expect_order(x, t0 * t1 * t2 * t1 * t2, q, "tau0 (tau1 tau2)^2");

    // RegularMap3 checks that each tau is an involution.
    RegularMap3 m(e.rep, x.ambient(t0), x.ambient(t1), x.ambient(t2));
    detail::expect(m.is_whole(), "tau0, tau1, tau2 generate the extended group");
    detail::expect(m.is_c_group(), "intersection condition for the taus");
    detail::expect(zigzag_length(m, 2) == q, "2-zigzags have length q");
    return m;
  }

  // Over a polarity-extended regular group (rho0..rho3, w):
  // (tau0, tau1, tau2) = (rho0, w, rho2).
  inline RegularMap3 pc_map_regular(ExtendedGroup const& e) {
    if (e.kind != DualityKind::regular_polarity) {
      throw PreconditionError("regular construction needs a polarity");
    }
    std::vector<Word> gens = e.generators;
    gens.push_back(e.duality);
    GeneratedGroup    x(e.rep, gens);
    std::size_t const p = x.local_order(s(0) * s(1));
    std::size_t const q = x.local_order(s(1) * s(2));

    RegularMap3 m(e.rep, e.generators[0], e.duality, e.generators[2]);
    auto        rot = m.rotations();
    detail::expect(rot.p() == 4, "faces are squares");
    detail::expect(rot.q() == 2 * q, "vertices have valency 2q");
    detail::expect(rot.q() >= 4 && hole_length(rot, 2) == p,
                   "2-holes have length p");
    detail::expect(m.is_c_group(), "intersection condition for the taus");

    // The dual triple (rho3, w, rho1) is the w-conjugate of (rho0, w, rho2),
    // so the relabelling must extend to an automorphism of the map group.
    std::vector<Word> dual{x.ambient(s(3)), x.ambient(s(4)), x.ambient(s(1))};
    detail::expect(extends_to_subgroup_automorphism(*e.rep, m.generators(), dual),
                   "(rho3, w, rho1) satisfies the same relations");
    return m;
  }

  // Index of <kappa1, kappa2> in the polarity-extended group, where
  // kappa1 = w rho0 and kappa2 = rho0 rho2 rho0 w.
  inline std::size_t kappa_index(ExtendedGroup const& e) {
    std::vector<Word> gens = e.generators;
    gens.push_back(e.duality);
    GeneratedGroup x(e.rep, gens);
    auto           lam
        = x.local_subgroup({s(4) * s(0), s(0) * s(2) * s(0) * s(4)});
    return e.order() / lam.size();
  }

  // Chiral or regular 4-polytope {{facet}, {vertex figure}} with toroidal
  // facets and vertex figures.
  struct LocallyToroidalSpec {
    TorusFamily facet;
    TorusFamily vertex_figure;

    std::string name() const {
      return "{" + facet.name() + "," + vertex_figure.name() + "}";
    }
  };

  inline void validate(LocallyToroidalSpec const& spec) {
    validate(spec.facet);
    validate(spec.vertex_figure);
    auto f = spec.facet.kind, v = spec.vertex_figure.kind;
    bool ok = (f == TorusKind::t44 && v == TorusKind::t44)
              || (f == TorusKind::t63 && v == TorusKind::t36)
              || (f == TorusKind::t36 && v == TorusKind::t63);
    if (!ok) {
      throw PreconditionError("facet " + to_string(f) + " and vertex figure "
                              + to_string(v) + " do not fit together");
    }
  }

  inline Presentation locally_toroidal_presentation(
      LocallyToroidalSpec const& spec) {
    validate(spec);
    Presentation p({"s1", "s2", "s3"});
    Word const   s1 = s(0), s2 = s(1), s3 = s(2);
    p.add_relator(power(s1, static_cast<long>(spec.facet.p())));
    p.add_relator(power(s2, static_cast<long>(spec.facet.q())));
    p.add_relator(power(s3, static_cast<long>(spec.vertex_figure.q())));
    p.add_relator(power(s1 * s2, 2));
    p.add_relator(power(s2 * s3, 2));
    p.add_relator(power(s1 * s2 * s3, 2));
    auto const& f = spec.facet;
    auto const& v = spec.vertex_figure;
    p.add_relator(torus_translation(f.kind, f.b, f.c, s1, s2));
    p.add_relator(torus_translation(v.kind, v.b, v.c, s2, s3));
    p.set_distinguished({Distinguished::Kind::sigma, {s1, s2, s3}});
    return p;
  }

  inline RotationGroup4 locally_toroidal(LocallyToroidalSpec const& spec,
                                         std::size_t cap = default_coset_cap) {
    return RotationGroup4(enumerate(locally_toroidal_presentation(spec), cap),
                          s(0), s(1), s(2));
  }

  // A quotient together with what changed on the way.
  struct QuotientResult {
    RotationGroup4                  group;
    std::optional<SelfDualityClass> self_duality;  // when polytopal
    std::vector<std::string>        warnings;
  };

  namespace detail {
    inline QuotientResult revalidate(RotationGroup4 const& before,
                                     RotationGroup4        after) {
      QuotientResult out{std::move(after), std::nullopt, {}};
      auto const&    g = out.group;
      auto           was = schlafli(before), now = schlafli(g);
      if (was != now) {
        out.warnings.push_back("Schlafli type collapsed from {"
                               + std::to_string(was[0]) + ","
                               + std::to_string(was[1]) + ","
                               + std::to_string(was[2]) + "} to {"
                               + std::to_string(now[0]) + ","
                               + std::to_string(now[1]) + ","
                               + std::to_string(now[2]) + "}");
      }
      if (check_polytopal4(g)) {
        out.self_duality = detect_self_duality(g);
      } else {
        out.warnings.push_back("quotient is not polytopal (intersection "
                               "condition fails)");
      }
      return out;
    }
  }  // namespace detail

  // Identify along left Petrie polygons: add the relator (s1 s3)^k.
  inline QuotientResult petrie_quotient(RotationGroup4 const& m, std::size_t k,
                                        std::size_t cap = default_coset_cap) {
    if (k == 0) {
      throw PreconditionError("Petrie quotient needs k >= 1");
    }
    auto p = detail::with_relators(m, {power(s(0) * s(2), static_cast<long>(k))});
    RotationGroup4 q(enumerate(p, cap), m.sigma(1), m.sigma(2), m.sigma(3));
    auto           out  = detail::revalidate(m, std::move(q));
    auto           left = petrie4(m).left;
    if (left % k != 0) {
      out.warnings.insert(out.warnings.begin(),
                          "k = " + std::to_string(k)
                              + " does not divide the Petrie length "
                              + std::to_string(left));
    }
    return out;
  }

  // Quotient by the centre: every central element becomes a relator.
  inline QuotientResult central_quotient(RotationGroup4 const& m,
                                         std::size_t cap = default_coset_cap) {
    if (!m.is_whole()) {
      throw PreconditionError("central quotient needs the distinguished words "
                              "to generate the presented group");
    }
    auto         z = center(m.rep());
    Presentation p = m.rep().presentation();
    for (auto x : z.elements()) {
      if (x != identity_element) {
        p.add_relator(m.rep().element_word(x));
      }
    }
    RotationGroup4 q(enumerate(p, cap), m.sigma(1), m.sigma(2), m.sigma(3));
    return detail::revalidate(m, std::move(q));
  }

}  // namespace rotamap

#endif  // ROTAMAP_CONSTRUCTIONS_HPP_
