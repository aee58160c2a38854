#ifndef ROTAMAP_SELFDUAL_HPP_
#define ROTAMAP_SELFDUAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "presentation.hpp"
#include "rotary.hpp"
#include "word.hpp"

namespace rotamap {

  enum class DualityKind { none, proper, improper, regular_polarity };

  inline char const* to_string(DualityKind k) {
    switch (k) {
      case DualityKind::none:
        return "none";
      case DualityKind::proper:
        return "proper";
      case DualityKind::improper:
        return "improper";
      case DualityKind::regular_polarity:
        return "regular-polarity";
    }
    return "?";
  }

  // Result of a self-duality test. `witness` holds the images of the
  // distinguished generators (local words) under conjugation by the duality.
  struct SelfDualityClass {
    DualityKind       kind = DualityKind::none;
    std::vector<Word> witness;
  };

  // Conjugation by a polarity fixing the base flag:
  // sigma1 -> sigma3^-1, sigma2 -> sigma2^-1, sigma3 -> sigma1^-1.
  inline std::vector<Word> proper_duality_images() {
    return {s_inv(2), s_inv(1), s_inv(0)};
  }

  // Conjugation by the distinguished duality of period 4:
  // sigma1 -> sigma3^-1, sigma2 -> sigma1 sigma2 sigma1^-1, sigma3 -> sigma1.
  inline std::vector<Word> improper_duality_images() {
    return {s_inv(2), s(0) * s(1) * s_inv(0), s(0)};
  }

  inline bool proper_duality_extends(RotationGroup4 const& m) {
    return m.extends_to_automorphism(proper_duality_images());
  }

  // The improper action must extend, and its square must be conjugation by
  // sigma1 sigma2 sigma3 (checked on the generators).
  inline bool improper_duality_extends(RotationGroup4 const& m) {
    auto images = improper_duality_images();
    if (!m.extends_to_automorphism(images)) {
      return false;
    }
    Word c = s(0) * s(1) * s(2);
    for (std::uint32_t i = 0; i < 3; ++i) {
      Word twice = substitute(images[i], images);
      if (!m.local_equal(twice, invert(c) * s(i) * c)) {
        return false;
      }
    }
    return true;
  }

  // Proper or improper self-duality of a polytopal rank-4 rotation group.
  // For chiral input at most one kind can hold. Regular input admits both;
  // it is reported as proper (it has a polarity).
  inline SelfDualityClass detect_self_duality(RotationGroup4 const& m) {
    if (!check_polytopal4(m)) {
      throw PreconditionError("self-duality test needs a polytopal group");
    }
    bool proper   = proper_duality_extends(m);
    bool improper = improper_duality_extends(m);
    if (proper && improper && !reflexible4(m)) {
      throw InconsistencyError("chiral group is both properly and improperly "
                               "self-dual");
    }
    if (proper) {
      return {DualityKind::proper, proper_duality_images()};
    }
    if (improper) {
      return {DualityKind::improper, improper_duality_images()};
    }
    return {};
  }

  // A group extended by a duality d. `generators` are the embedded
  // distinguished words of the base group (sigma1..sigma3, or rho0..rho3 for
  // a polarity) and `duality` the word for d.
  struct ExtendedGroup {
    GroupPtr          rep;
    DualityKind       kind = DualityKind::none;
    std::vector<Word> generators;
    Word              duality;
    std::size_t       base_order = 0;

    std::size_t order() const {
      return rep->order();
    }
  };

  namespace detail {

    // Presentation of the base group plus a new generator d and the given
    // relators (local words over generators 0..n-1 = base words, n = d).
    inline ExtendedGroup extend(GeneratedGroup const& base, DualityKind kind,
                                std::vector<Word> const& local_relators,
                                std::size_t              cap) {
      if (!base.is_whole()) {
        throw PreconditionError("the distinguished words must generate the "
                                "presented group to build its extension");
      }
      Presentation p;
      for (auto const& name : base.rep().presentation().names()) {
        p.add_generator(name);
      }
      auto d = p.add_generator(base.rep().presentation().fresh_name("d"));
      for (auto const& r : base.rep().presentation().relators()) {
        p.add_relator(r);
      }
      std::vector<Word> images = base.generators();
      images.push_back(Word::generator(d));
      for (auto const& r : local_relators) {
        p.add_relator(substitute(r, images));
      }
      ExtendedGroup e;
      e.rep        = enumerate(p, cap);
      e.kind       = kind;
      e.generators = base.generators();
      e.duality    = Word::generator(d);
      e.base_order = base.order();
      if (e.rep->order() != 2 * e.base_order) {
        throw ContractError("extended group has order "
                            + std::to_string(e.rep->order()) + ", expected "
                            + std::to_string(2 * e.base_order)
                            + " (duality relations collapse the group)");
      }
      return e;
    }

    inline void require(bool ok, std::string const& identity) {
      if (!ok) {
        throw ContractError("identity failed: " + identity);
      }
    }

  }  // namespace detail

  // <Gamma, d> with d^2 = s1 s2 s3 and d acting as the improper duality.
  inline ExtendedGroup extend_improper(RotationGroup4 const& m,
                                       std::size_t cap = default_coset_cap) {
    if (!improper_duality_extends(m)) {
      throw PreconditionError("group is not improperly self-dual");
    }
    Word const D = s(3), Di = s_inv(3);
    auto e       = detail::extend(
        m, DualityKind::improper,
        {Di * s(0) * D * s(2), Di * s(1) * D * s(0) * s_inv(1) * s_inv(0),
               Di * s(2) * D * s_inv(0), D * D * s_inv(2) * s_inv(1) * s_inv(0)},
        cap);

    // Post-hoc checks in the new group.
    GeneratedGroup x(e.rep, {e.generators[0], e.generators[1], e.generators[2],
                             e.duality});
    auto conj = [](Word const& w) { return s_inv(3) * w * s(3); };
    Word c    = s(0) * s(1) * s(2);
    detail::require(x.local_order(s(3)) == 4, "d has period 4");
    detail::require(x.local_equal(s(3) * s(3), c), "d^2 = s1 s2 s3");
    detail::require(x.local_equal(conj(c), c), "d fixes s1 s2 s3");
    std::vector<Word> cycle{s(0) * s(1), s(0) * s(1) * s(2) * s_inv(0),
                            s_inv(2) * s(0) * s(1) * s(2), s(1) * s(2)};
    for (std::size_t i = 0; i < 4; ++i) {
      detail::require(x.local_equal(conj(cycle[i]), cycle[(i + 1) % 4]),
                      "d-conjugation cycles the four involutions (step "
                          + std::to_string(i + 1) + ")");
    }
    return e;
  }

  // <Gamma, w> with w a polarity: w^2 = 1, w s1 w = s3^-1, w s2 w = s2^-1.
  inline ExtendedGroup extend_proper(RotationGroup4 const& m,
                                     std::size_t cap = default_coset_cap) {
    if (!proper_duality_extends(m)) {
      throw PreconditionError("group is not properly self-dual");
    }
    Word const W = s(3);
    auto e       = detail::extend(m, DualityKind::proper,
                                  {W * W, W * s(0) * W * s(2),
                                   W * s(1) * W * s(1), W * s(2) * W * s(0)},
                                  cap);
    GeneratedGroup x(e.rep, {e.generators[0], e.generators[1], e.generators[2],
                             e.duality});
    auto conj = [&](Word const& w) { return W * w * W; };
    detail::require(x.local_order(W) == 2, "w is an involution");
    detail::require(x.local_equal(conj(s(0) * s(1)), s(1) * s(2)),
                    "w s1 s2 w = s2 s3");
    detail::require(x.local_equal(conj(s(0) * s(1) * s(2)), s(0) * s(1) * s(2)),
                    "w fixes s1 s2 s3");
    return e;
  }

  inline std::vector<Word> polarity_images() {
    return {s(3), s(2), s(1), s(0)};
  }

  // A regular polytope is self-dual iff rho_i -> rho_{3-i} extends.
  inline SelfDualityClass find_polarity(RegularCGroup4 const& c) {
    if (c.extends_to_automorphism(polarity_images())) {
      return {DualityKind::regular_polarity, polarity_images()};
    }
    return {};
  }

  // <Gamma, w> with w^2 = 1 and w rho_i w = rho_{3-i}.
  inline ExtendedGroup extend_polarity(RegularCGroup4 const& c,
                                       std::size_t cap = default_coset_cap) {
    if (find_polarity(c).kind != DualityKind::regular_polarity) {
      throw PreconditionError("regular group has no polarity");
    }
    Word const        W = s(4);
    std::vector<Word> rels{W * W};
    for (std::uint32_t i = 0; i < 4; ++i) {
      rels.push_back(W * s(i) * W * s(3 - i));
    }
    return detail::extend(c, DualityKind::regular_polarity, rels, cap);
  }

}  // namespace rotamap

#endif  // ROTAMAP_SELFDUAL_HPP_
