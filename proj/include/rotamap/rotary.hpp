#ifndef ROTAMAP_ROTARY_HPP_
#define ROTAMAP_ROTARY_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"
#include "group.hpp"
#include "word.hpp"

namespace rotamap {

  enum class Chirality { chiral, regular, not_polytopal };

  inline char const* to_string(Chirality c) {
    switch (c) {
      case Chirality::chiral:
        return "chiral";
      case Chirality::regular:
        return "regular";
      case Chirality::not_polytopal:
        return "not-polytopal";
    }
    return "?";
  }

  // The subgroup of a GroupRep generated by a list of distinguished words.
  // Words over the distinguished generators ("local" words, letter i = the
  // i-th distinguished generator) are translated to the ambient group with
  // `ambient`.
  class GeneratedGroup {
   public:
    GeneratedGroup(GroupPtr rep, std::vector<Word> gens)
        : _rep(std::move(rep)), _gens(std::move(gens)) {
      for (auto& w : _gens) {
        w = reduce(w);
      }
      _elements = subgroup_closure(*_rep, _gens);
    }

    GroupRep const& rep() const noexcept {
      return *_rep;
    }
    GroupPtr const& rep_ptr() const noexcept {
      return _rep;
    }
    std::vector<Word> const& generators() const noexcept {
      return _gens;
    }
    SubgroupHandle const& elements() const noexcept {
      return _elements;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    // True iff the distinguished words generate the whole presented group.
    bool is_whole() const noexcept {
      return _elements.size() == _rep->order();
    }

    Word ambient(Word const& local) const {
      return substitute(local, _gens);
    }
    std::size_t local_order(Word const& local) const {
      return _rep->element_order(ambient(local));
    }
    bool local_equal(Word const& u, Word const& v) const {
      return _rep->equal(ambient(u), ambient(v));
    }
    SubgroupHandle local_subgroup(std::initializer_list<Word> locals) const {
      std::vector<Word> amb;
      for (auto const& w : locals) {
        amb.push_back(ambient(w));
      }
      return subgroup_closure(*_rep, amb);
    }

    // Does generator_i -> images[i] (local words) extend to an automorphism
    // of this subgroup?
    bool extends_to_automorphism(std::span<Word const> local_images) const {
      std::vector<Word> amb;
      for (auto const& w : local_images) {
        amb.push_back(ambient(w));
      }
      return extends_to_subgroup_automorphism(*_rep, _gens, amb);
    }

   private:
    GroupPtr          _rep;
    std::vector<Word> _gens;
    SubgroupHandle    _elements;
  };

  // Local-word shorthand: s(0) is the first distinguished generator.
  inline Word s(std::uint32_t i) {
    return Word::generator(i);
  }
  inline Word s_inv(std::uint32_t i) {
    return Word{gen_inv(i)};
  }

  // Rotation group <sigma1, sigma2> of a chiral or regular map.
  class RotationGroup3 : public GeneratedGroup {
   public:
    RotationGroup3(GroupPtr rep, Word sigma1, Word sigma2)
        : GeneratedGroup(std::move(rep), {std::move(sigma1), std::move(sigma2)}) {
      if (local_order(power(s(0) * s(1), 2)) != 1) {
        throw PreconditionError("(sigma1 sigma2)^2 is not the identity");
      }
      _p = local_order(s(0));
      _q = local_order(s(1));
      if (_p < 2 || _q < 2) {
        throw PreconditionError("rotation sigma1 or sigma2 collapsed (type {"
                                + std::to_string(_p) + ","
                                + std::to_string(_q) + "})");
      }
    }

    Word const& sigma1() const {
      return generators()[0];
    }
    Word const& sigma2() const {
      return generators()[1];
    }
    std::size_t p() const noexcept {
      return _p;
    }
    std::size_t q() const noexcept {
      return _q;
    }

   private:
    std::size_t _p = 0;
    std::size_t _q = 0;
  };

  // Rotation group <sigma1, sigma2, sigma3> of a chiral or regular
  // 4-polytope.
  class RotationGroup4 : public GeneratedGroup {
   public:
    RotationGroup4(GroupPtr rep, Word sigma1, Word sigma2, Word sigma3)
        : GeneratedGroup(std::move(rep), {std::move(sigma1), std::move(sigma2),
                                          std::move(sigma3)}) {
      for (auto const& [w, name] :
           {std::pair{s(0) * s(1), "sigma1 sigma2"},
            std::pair{s(1) * s(2), "sigma2 sigma3"},
            std::pair{s(0) * s(1) * s(2), "sigma1 sigma2 sigma3"}}) {
        if (local_order(power(w, 2)) != 1) {
          throw PreconditionError(std::string("(") + name
                                  + ")^2 is not the identity");
        }
      }
    }

    Word const& sigma(std::size_t i) const {
      return generators().at(i - 1);
    }
  };

  namespace detail {

    // Checks <rho_I> ∩ <rho_J> = <rho_{I∩J}> for all index sets I, J.
    inline bool intersection_condition(GeneratedGroup const& g) {
      auto const                  n = g.generators().size();
      std::vector<SubgroupHandle> sub(std::size_t{1} << n);
      for (std::size_t mask = 0; mask < sub.size(); ++mask) {
        std::vector<Word> gens;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (std::size_t{1} << i)) {
            gens.push_back(g.generators()[i]);
          }
        }
        sub[mask] = subgroup_closure(g.rep(), gens);
      }
      for (std::size_t a = 0; a < sub.size(); ++a) {
        for (std::size_t b = a + 1; b < sub.size(); ++b) {
          if (intersection(sub[a], sub[b]).size() != sub[a & b].size()) {
            return false;
          }
        }
      }
      return true;
    }

    inline void check_involutions(GeneratedGroup const& g) {
      auto n = g.generators().size();
      for (std::uint32_t i = 0; i < n; ++i) {
        if (g.local_order(s(i)) != 2) {
          throw PreconditionError("rho" + std::to_string(i)
                                  + " is not an involution (order "
                                  + std::to_string(g.local_order(s(i))) + ")");
        }
        for (std::uint32_t j = i + 2; j < n; ++j) {
          if (g.local_order(s(i) * s(j)) > 2) {
            throw PreconditionError("rho" + std::to_string(i) + " and rho"
                                    + std::to_string(j) + " do not commute");
          }
        }
      }
    }

  }  // namespace detail

  // Regular map (3-polytope candidate) given by involutions rho0, rho1, rho2.
  class RegularMap3 : public GeneratedGroup {
   public:
    RegularMap3(GroupPtr rep, Word rho0, Word rho1, Word rho2)
        : GeneratedGroup(std::move(rep),
                         {std::move(rho0), std::move(rho1), std::move(rho2)}) {
      detail::check_involutions(*this);
    }

    Word const& rho(std::size_t i) const {
      return generators().at(i);
    }

    bool is_c_group() const {
      return detail::intersection_condition(*this);
    }

    // sigma1 = rho0 rho1, sigma2 = rho1 rho2.
    RotationGroup3 rotations() const {
      return RotationGroup3(rep_ptr(), reduce(rho(0) * rho(1)),
                            reduce(rho(1) * rho(2)));
    }
  };

  // Regular 4-polytope group: a string C-group on rho0..rho3.
  class RegularCGroup4 : public GeneratedGroup {
   public:
    RegularCGroup4(GroupPtr rep, Word rho0, Word rho1, Word rho2, Word rho3)
        : GeneratedGroup(std::move(rep),
                         {std::move(rho0), std::move(rho1), std::move(rho2),
                          std::move(rho3)}) {
      detail::check_involutions(*this);
      if (!detail::intersection_condition(*this)) {
        throw PreconditionError("rho generators violate the intersection "
                                "condition (not a C-group)");
      }
    }

    Word const& rho(std::size_t i) const {
      return generators().at(i);
    }
  };

  struct FVector {
    std::size_t vertices = 0;
    std::size_t edges    = 0;
    std::size_t faces    = 0;

    friend bool operator==(FVector const&, FVector const&) = default;
  };

  struct EulerGenus {
    long                euler = 0;
    std::optional<long> genus;

    friend bool operator==(EulerGenus const&, EulerGenus const&) = default;
  };

  struct InvolutionReport {
    std::size_t n_tau_order             = 0;
    std::size_t n_tau_index             = 0;
    bool        group_gen_by_involutions = false;
    bool        index_bound_holds        = true;
  };

  struct MapInvariants {
    std::array<std::size_t, 2>                   schlafli{};
    FVector                                      f_vector;
    EulerGenus                                   euler_genus;
    std::map<std::size_t, std::size_t>           holes;
    std::optional<std::map<std::size_t, std::size_t>> zigzags;
    Chirality                                    chirality = Chirality::not_polytopal;
  };

  inline std::array<std::size_t, 2> schlafli(RotationGroup3 const& m) {
    return {m.p(), m.q()};
  }

  inline std::array<std::size_t, 3> schlafli(RotationGroup4 const& m) {
    return {m.local_order(s(0)), m.local_order(s(1)), m.local_order(s(2))};
  }

  // <sigma1> ∩ <sigma2> = {1}.
  inline bool check_polytopal3(RotationGroup3 const& m) {
    return intersection(m.local_subgroup({s(0)}), m.local_subgroup({s(1)}))
               .size()
           == 1;
  }

  // <s1,s2> ∩ <s2,s3> = <s2> and <s1> ∩ <s2> = {1} = <s2> ∩ <s3>.
  inline bool check_polytopal4(RotationGroup4 const& m) {
    auto s1 = m.local_subgroup({s(0)});
    auto s2 = m.local_subgroup({s(1)});
    auto s3 = m.local_subgroup({s(2)});
    if (intersection(s1, s2).size() != 1 || intersection(s2, s3).size() != 1) {
      return false;
    }
    auto s12 = m.local_subgroup({s(0), s(1)});
    auto s23 = m.local_subgroup({s(1), s(2)});
    return intersection(s12, s23).size() == s2.size();
  }

  // Conjugation by rho0 of the full group: sigma1 -> sigma1^-1,
  // sigma2 -> sigma1^2 sigma2. The map is regular iff this extends.
  inline bool reflexible3(RotationGroup3 const& m) {
    std::vector<Word> images{s_inv(0), s(0) * s(0) * s(1)};
    return m.extends_to_automorphism(images);
  }

  // Conjugation by rho3: sigma1 -> sigma1, sigma2 -> sigma2 sigma3^2,
  // sigma3 -> sigma3^-1.
  inline bool reflexible4(RotationGroup4 const& m) {
    std::vector<Word> images{s(0), s(1) * s(2) * s(2), s_inv(2)};
    return m.extends_to_automorphism(images);
  }

  inline Chirality classify3(RotationGroup3 const& m) {
    if (!check_polytopal3(m)) {
      return Chirality::not_polytopal;
    }
    return reflexible3(m) ? Chirality::regular : Chirality::chiral;
  }

  inline Chirality classify4(RotationGroup4 const& m) {
    if (!check_polytopal4(m)) {
      return Chirality::not_polytopal;
    }
    return reflexible4(m) ? Chirality::regular : Chirality::chiral;
  }

  // Faces, edges and vertices as coset counts of <sigma1>, <sigma1 sigma2>
  // and <sigma2>. Defined even when the group is not polytopal.
  inline FVector f_vector3(RotationGroup3 const& m) {
    auto n = m.order();
    return FVector{n / m.q(), n / 2, n / m.p()};
  }

  // Flag-based counts for a regular map: the full group acts regularly on
  // flags, so each count is an index of a rank-2 parabolic subgroup.
  inline FVector f_vector3(RegularMap3 const& m) {
    auto n = m.order();
    return FVector{n / m.local_subgroup({s(1), s(2)}).size(),
                   n / m.local_subgroup({s(0), s(2)}).size(),
                   n / m.local_subgroup({s(0), s(1)}).size()};
  }

  namespace detail {
    inline EulerGenus euler_from(FVector const& f, bool orientable) {
      long chi = static_cast<long>(f.vertices) - static_cast<long>(f.edges)
                 + static_cast<long>(f.faces);
      EulerGenus out{chi, std::nullopt};
      if (orientable) {
        if (chi % 2 != 0) {
          throw InconsistencyError("odd Euler characteristic "
                                   + std::to_string(chi)
                                   + " for an orientable map");
        }
        out.genus = (2 - chi) / 2;
      }
      return out;
    }
  }  // namespace detail

  // Maps built from rotation groups are orientable.
  inline EulerGenus euler_genus(RotationGroup3 const& m) {
    return detail::euler_from(f_vector3(m), true);
  }

  // Genus only when the rotation subgroup has index 2 (orientable);
  // otherwise unknown.
  inline EulerGenus euler_genus(RegularMap3 const& m) {
    bool orientable = 2 * m.rotations().order() == m.order();
    return detail::euler_from(f_vector3(m), orientable);
  }

  // Period of sigma1 sigma2^(1-j), 1 <= j <= q/2.
  inline std::size_t hole_length(RotationGroup3 const& m, std::size_t j) {
    if (j < 1 || j > m.q() / 2) {
      throw PreconditionError("hole index " + std::to_string(j)
                              + " outside 1.." + std::to_string(m.q() / 2));
    }
    return m.local_order(s(0) * power(s(1), 1 - static_cast<long>(j)));
  }

  // Period of rho0 (rho1 rho2)^j; j = 1 gives the Petrie polygon.
  inline std::size_t zigzag_length(RegularMap3 const& m, std::size_t j) {
    if (j < 1) {
      throw PreconditionError("zigzag index must be positive");
    }
    return m.local_order(s(0) * power(s(1) * s(2), static_cast<long>(j)));
  }

  struct PetrieLengths {
    std::size_t left  = 0;  // order of sigma1 sigma3
    std::size_t right = 0;  // order of sigma1 sigma3^-1

    friend bool operator==(PetrieLengths const&, PetrieLengths const&) = default;
  };

  inline PetrieLengths petrie4(RotationGroup4 const& m) {
    return {m.local_order(s(0) * s(2)), m.local_order(s(0) * s_inv(2))};
  }

  namespace detail {
    inline InvolutionReport involution_report(GeneratedGroup const& m,
                                              Word const&           tau) {
      auto const&      rep = m.rep();
      Word             t   = m.ambient(tau);
      auto             n   = normal_closure(rep, std::span<Word const>(&t, 1),
                                            m.generators());
      InvolutionReport out;
      out.n_tau_order              = n.size();
      out.n_tau_index              = m.order() / n.size();
      out.group_gen_by_involutions = generated_by_involutions(rep, m.elements());
      return out;
    }
  }  // namespace detail

  // Normal closure N of the half-turn sigma1 sigma2 and whether the group is
  // generated by involutions. Modulo N, sigma2 = sigma1^-1, so the quotient
  // is cyclic; a group generated by involutions then has N of index 1 or 2.
  inline InvolutionReport involution_report(RotationGroup3 const& m) {
    auto out = detail::involution_report(m, s(0) * s(1));
    out.index_bound_holds
        = !(out.group_gen_by_involutions && out.n_tau_index > 2);
    return out;
  }

  // Same diagnostics in rank 4. Modulo N, sigma2 = sigma1^-1 and the
  // relations leave a dihedral quotient <x, y | x^p, y^2, (x^-1 y)^2>, so the
  // index divides 2p whether or not the group is generated by involutions.
  inline InvolutionReport involution_report(RotationGroup4 const& m) {
    auto out = detail::involution_report(m, s(0) * s(1));
    out.index_bound_holds = (2 * m.local_order(s(0))) % out.n_tau_index == 0;
    return out;
  }

  // sigma_i = rho_{i-1} rho_i, as a wrapper over the same group.
  inline RotationGroup4 rotation_subgroup(RegularCGroup4 const& c) {
    return RotationGroup4(c.rep_ptr(), reduce(c.rho(0) * c.rho(1)),
                          reduce(c.rho(1) * c.rho(2)),
                          reduce(c.rho(2) * c.rho(3)));
  }

  inline MapInvariants map_invariants(RotationGroup3 const& m) {
    MapInvariants out;
    out.schlafli    = schlafli(m);
    out.f_vector    = f_vector3(m);
    out.euler_genus = euler_genus(m);
    for (std::size_t j = 2; j <= m.q() / 2; ++j) {
      out.holes[j] = hole_length(m, j);
    }
    out.chirality = classify3(m);
    return out;
  }

  inline MapInvariants map_invariants(RegularMap3 const& m) {
    auto          rot = m.rotations();
    MapInvariants out;
    out.schlafli    = schlafli(rot);
    out.f_vector    = f_vector3(m);
    out.euler_genus = euler_genus(m);
    for (std::size_t j = 2; j <= rot.q() / 2; ++j) {
      out.holes[j] = hole_length(rot, j);
    }
    out.zigzags.emplace();
    for (std::size_t j = 1; j <= std::max<std::size_t>(1, rot.q() / 2); ++j) {
      (*out.zigzags)[j] = zigzag_length(m, j);
    }
    out.chirality = m.is_c_group() ? Chirality::regular : Chirality::not_polytopal;
    return out;
  }

}  // namespace rotamap

#endif  // ROTAMAP_ROTARY_HPP_
