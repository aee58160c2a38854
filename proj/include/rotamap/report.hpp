#ifndef ROTAMAP_REPORT_HPP_
#define ROTAMAP_REPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "error.hpp"
#include "group.hpp"
#include "presentation.hpp"
#include "rotary.hpp"
#include "selfdual.hpp"

namespace rotamap {

  inline constexpr int report_schema_version = 1;

  // Everything `analyze` knows about one presentation. Fields that do not
  // apply to the input's rank are empty (null in JSON).
  struct AnalysisReport {
    std::size_t                                       group_order = 0;
    std::vector<std::size_t>                          schlafli;
    bool                                              polytopal = false;
    Chirality                                         chirality = Chirality::not_polytopal;
    std::optional<DualityKind>                        self_duality;
    std::optional<PetrieLengths>                      petrie;
    std::map<std::size_t, std::size_t>                holes;
    std::optional<std::map<std::size_t, std::size_t>> zigzags;
    std::optional<FVector>                            f_vector;
    std::optional<long>                               euler;
    std::optional<long>                               genus;
    InvolutionReport                                  involutions;
    std::vector<std::string>                          warnings;
  };

  namespace detail {

    inline std::string type_string(std::vector<std::size_t> const& t) {
      std::string out = "{";
      for (std::size_t i = 0; i < t.size(); ++i) {
        out += (i ? "," : "") + std::to_string(t[i]);
      }
      return out + "}";
    }

    // Exponent k of a relator w^k for a single-generator distinguished word.
    inline std::optional<std::size_t> nominal_period(Presentation const& p,
                                                     Word const&         w) {
      if (w.size() != 1 || w[0].inv) {
        return std::nullopt;
      }
      std::optional<std::size_t> best;
      for (auto const& r : p.relators()) {
        if (r.empty()
            || !std::all_of(r.begin(), r.end(),
                            [&](Letter l) { return l.gen == w[0].gen; })) {
          continue;
        }
        if (!std::all_of(r.begin(), r.end(),
                         [&](Letter l) { return l.inv == r[0].inv; })) {
          continue;
        }
        if (!best || r.size() < *best) {
          best = r.size();
        }
      }
      return best;
    }

    inline void nominal_warning(AnalysisReport&          out,
                                Presentation const&      p,
                                std::vector<Word> const& sigmas) {
      std::vector<std::size_t> nominal;
      for (auto const& w : sigmas) {
        auto k = nominal_period(p, w);
        if (!k) {
          return;
        }
        nominal.push_back(*k);
      }
      if (nominal != out.schlafli) {
        out.warnings.push_back("nominal type " + type_string(nominal)
                               + " collapses to " + type_string(out.schlafli));
      }
    }

    inline void whole_warning(AnalysisReport& out, GeneratedGroup const& g) {
      if (!g.is_whole()) {
        out.warnings.push_back(
            "distinguished words generate a subgroup of order "
            + std::to_string(g.order()) + " in a group of order "
            + std::to_string(g.rep().order()));
      }
    }

  }  // namespace detail

  inline AnalysisReport report(RotationGroup3 const& m) {
    AnalysisReport out;
    auto           inv = map_invariants(m);
    out.group_order    = m.order();
    out.schlafli       = {inv.schlafli[0], inv.schlafli[1]};
    out.polytopal      = inv.chirality != Chirality::not_polytopal;
    out.chirality      = inv.chirality;
    out.holes          = inv.holes;
    out.f_vector       = inv.f_vector;
    out.euler          = inv.euler_genus.euler;
    out.genus          = inv.euler_genus.genus;
    out.involutions    = involution_report(m);
    if (!out.polytopal) {
      out.warnings.push_back("<sigma1> and <sigma2> intersect nontrivially; "
                             "cell counts are coset counts only");
    }
    detail::whole_warning(out, m);
    return out;
  }

  inline AnalysisReport report(RegularMap3 const& m) {
    AnalysisReport out;
    auto           inv = map_invariants(m);
    out.group_order    = m.order();
    out.schlafli       = {inv.schlafli[0], inv.schlafli[1]};
    out.polytopal      = inv.chirality != Chirality::not_polytopal;
    out.chirality      = inv.chirality;
    out.holes          = inv.holes;
    out.zigzags        = inv.zigzags;
    out.f_vector       = inv.f_vector;
    out.euler          = inv.euler_genus.euler;
    out.genus          = inv.euler_genus.genus;
    out.involutions    = involution_report(m.rotations());
    if (!out.genus) {
      out.warnings.push_back("rotation subgroup is the whole group; genus "
                             "not reported");
    }
    detail::whole_warning(out, m);
    return out;
  }

  inline AnalysisReport report(RotationGroup4 const& m) {
    AnalysisReport out;
    auto           t = schlafli(m);
    out.group_order  = m.order();
    out.schlafli     = {t[0], t[1], t[2]};
    out.polytopal    = check_polytopal4(m);
    out.chirality    = classify4(m);
    out.petrie       = petrie4(m);
    out.involutions  = involution_report(m);
    if (out.polytopal) {
      out.self_duality = detect_self_duality(m).kind;
    } else {
      out.warnings.push_back("intersection condition fails; self-duality "
                             "not tested");
    }
    detail::whole_warning(out, m);
    return out;
  }

  inline AnalysisReport report(RegularCGroup4 const& c) {
    auto rot  = rotation_subgroup(c);
    auto out  = report(rot);
    out.group_order  = c.order();
    out.chirality    = Chirality::regular;
    out.self_duality = find_polarity(c).kind;
    // the rotation-subgroup warning would be misleading here
    std::erase_if(out.warnings, [](std::string const& w) {
      return w.starts_with("distinguished words generate");
    });
    detail::whole_warning(out, c);
    return out;
  }

  // A wrapper built from the presentation's `sigma` or `rho` line.
  inline AnalysisReport analyze(Presentation const& p,
                                std::size_t         cap = default_coset_cap) {
    auto const& d = p.distinguished();
    if (!d) {
      throw PreconditionError("presentation has no sigma or rho line");
    }
    auto g = enumerate(p, cap);
    auto w = d->words;
    if (d->kind == Distinguished::Kind::sigma) {
      if (w.size() == 2) {
        auto out = report(RotationGroup3(g, w[0], w[1]));
        detail::nominal_warning(out, p, w);
        return out;
      }
      if (w.size() == 3) {
        auto out = report(RotationGroup4(g, w[0], w[1], w[2]));
        detail::nominal_warning(out, p, w);
        return out;
      }
      throw PreconditionError("only ranks 3 and 4 are supported");
    }
    if (w.size() == 3) {
      return report(RegularMap3(g, w[0], w[1], w[2]));
    }
    return report(RegularCGroup4(g, w[0], w[1], w[2], w[3]));
  }

  // ---- constructions driven from a presentation -------------------------

  struct ConstructionResult {
    std::string    operation;  // e.g. "kappa (improper)"
    Presentation   output;     // with a sigma or rho line
    AnalysisReport report;
    std::size_t    base_order     = 0;
    std::size_t    extended_order = 0;
  };

  namespace detail {
    inline Presentation with_line(ExtendedGroup const& e, Distinguished::Kind k,
                                  std::vector<Word> const& words) {
      Presentation p = e.rep->presentation();
      p.set_distinguished({k, words});
      return p;
    }
  }  // namespace detail

  // Petrie-Coxeter type map of a self-dual rank-4 input: kappa mixing for an
  // improper duality, tau twisting for a proper one, and (rho0, w, rho2) for
  // a regular input with a polarity.
  inline ConstructionResult construct_petrie_coxeter(
      Presentation const& p, std::size_t cap = default_coset_cap) {
    auto const& d = p.distinguished();
    if (!d || d->words.size() != (d->kind == Distinguished::Kind::sigma ? 3 : 4)) {
      throw PreconditionError("petrie-coxeter needs a rank-4 input (three "
                              "sigma words or four rho words)");
    }
    auto               g = enumerate(p, cap);
    auto const&        w = d->words;
    ConstructionResult out;
    if (d->kind == Distinguished::Kind::rho) {
      RegularCGroup4 c(g, w[0], w[1], w[2], w[3]);
      auto           e = extend_polarity(c, cap);
      auto           m = pc_map_regular(e);
      out.operation    = "twist (rho0, w, rho2) over a polarity";
      out.output       = detail::with_line(e, Distinguished::Kind::rho,
                                           m.generators());
      out.report       = report(m);
      out.base_order   = c.order();
      out.extended_order = e.order();
      return out;
    }
    RotationGroup4 base(g, w[0], w[1], w[2]);
    auto           sd = detect_self_duality(base);
    if (sd.kind == DualityKind::proper) {
      auto e           = extend_proper(base, cap);
      auto m           = pc_map_proper(e);
      out.operation    = "twist (s1 s2 s3, s1 s2, w) over a proper duality";
      out.output       = detail::with_line(e, Distinguished::Kind::rho,
                                           m.generators());
      out.report       = report(m);
      out.base_order   = base.order();
      out.extended_order = e.order();
      return out;
    }
    if (sd.kind == DualityKind::improper) {
      auto e           = extend_improper(base, cap);
      auto m           = pc_map_improper(e);
      out.operation    = "mix (d, s1 s2 d^-1) over an improper duality";
      out.output       = detail::with_line(e, Distinguished::Kind::sigma,
                                           m.generators());
      out.report       = report(m);
      out.base_order   = base.order();
      out.extended_order = e.order();
      return out;
    }
    throw PreconditionError("input is not self-dual (neither the proper nor "
                            "the improper duality action extends)");
  }

  // Petrie quotient (k > 0) or central quotient (k == 0) of a rank-4 input.
  inline ConstructionResult construct_quotient(Presentation const& p,
                                               std::size_t         k,
                                               std::size_t cap = default_coset_cap) {
    auto const& d = p.distinguished();
    if (!d || d->kind != Distinguished::Kind::sigma || d->words.size() != 3) {
      throw PreconditionError("quotient needs a rank-4 sigma input");
    }
    auto const&    w = d->words;
    RotationGroup4 base(enumerate(p, cap), w[0], w[1], w[2]);
    auto q = k == 0 ? central_quotient(base, cap) : petrie_quotient(base, k, cap);
    ConstructionResult out;
    out.operation  = k == 0 ? "central quotient"
                            : "Petrie quotient (s1 s3)^" + std::to_string(k);
    out.output     = q.group.rep().presentation();
    out.output.set_distinguished({Distinguished::Kind::sigma, q.group.generators()});
    out.report     = report(q.group);
    out.base_order = base.order();
    out.report.warnings.insert(out.report.warnings.begin(), q.warnings.begin(),
                               q.warnings.end());
    return out;
  }

  // ---- JSON ---------------------------------------------------------------

  inline nlohmann::json to_json(AnalysisReport const& r) {
    using nlohmann::json;
    auto counts = [](std::map<std::size_t, std::size_t> const& m) {
      json o = json::object();
      for (auto [k, v] : m) {
        o[std::to_string(k)] = v;
      }
      return o;
    };
    json j;
    j["schema"]      = report_schema_version;
    j["group_order"] = r.group_order;
    j["schlafli"]    = r.schlafli;
    j["polytopal"]   = r.polytopal;
    j["chirality"]   = to_string(r.chirality);
    j["self_duality"]
        = r.self_duality ? json(to_string(*r.self_duality)) : json(nullptr);
    j["petrie"] = r.petrie ? json{{"left", r.petrie->left}, {"right", r.petrie->right}}
                           : json(nullptr);
    j["holes"]   = counts(r.holes);
    j["zigzags"] = r.zigzags ? counts(*r.zigzags) : json(nullptr);
    j["f_vector"]
        = r.f_vector ? json::array({r.f_vector->vertices, r.f_vector->edges,
                                    r.f_vector->faces})
                     : json(nullptr);
    j["euler"]       = r.euler ? json(*r.euler) : json(nullptr);
    j["genus"]       = r.genus ? json(*r.genus) : json(nullptr);
    j["involutions"] = {
        {"n_tau_order", r.involutions.n_tau_order},
        {"n_tau_index", r.involutions.n_tau_index},
        {"group_gen_by_involutions", r.involutions.group_gen_by_involutions},
        {"index_bound_holds", r.involutions.index_bound_holds}};
    j["warnings"] = r.warnings;
    return j;
  }

  namespace detail {
    inline Chirality chirality_from(std::string const& s) {
      for (auto c : {Chirality::chiral, Chirality::regular,
                     Chirality::not_polytopal}) {
        if (s == to_string(c)) {
          return c;
        }
      }
      throw ParseError(0, "unknown chirality '" + s + "'");
    }
    inline DualityKind duality_from(std::string const& s) {
      for (auto k : {DualityKind::none, DualityKind::proper,
                     DualityKind::improper, DualityKind::regular_polarity}) {
        if (s == to_string(k)) {
          return k;
        }
      }
      throw ParseError(0, "unknown self-duality '" + s + "'");
    }
    inline std::map<std::size_t, std::size_t> counts_from(nlohmann::json const& j) {
      std::map<std::size_t, std::size_t> m;
      for (auto const& [k, v] : j.items()) {
        m[std::stoul(k)] = v.get<std::size_t>();
      }
      return m;
    }
  }  // namespace detail

  // Reads a report back. Unknown keys are ignored.
  inline AnalysisReport report_from_json(nlohmann::json const& j) {
    AnalysisReport r;
    if (j.value("schema", 0) != report_schema_version) {
      throw ParseError(0, "unsupported report schema");
    }
    r.group_order = j.at("group_order").get<std::size_t>();
    r.schlafli    = j.at("schlafli").get<std::vector<std::size_t>>();
    r.polytopal   = j.at("polytopal").get<bool>();
    r.chirality   = detail::chirality_from(j.at("chirality").get<std::string>());
    if (!j.at("self_duality").is_null()) {
      r.self_duality = detail::duality_from(j["self_duality"].get<std::string>());
    }
    if (!j.at("petrie").is_null()) {
      r.petrie = PetrieLengths{j["petrie"].at("left").get<std::size_t>(),
                               j["petrie"].at("right").get<std::size_t>()};
    }
    r.holes = detail::counts_from(j.at("holes"));
    if (!j.at("zigzags").is_null()) {
      r.zigzags = detail::counts_from(j["zigzags"]);
    }
    if (!j.at("f_vector").is_null()) {
      auto f     = j["f_vector"].get<std::vector<std::size_t>>();
      r.f_vector = FVector{f.at(0), f.at(1), f.at(2)};
    }
    if (!j.at("euler").is_null()) {
      r.euler = j["euler"].get<long>();
    }
    if (!j.at("genus").is_null()) {
      r.genus = j["genus"].get<long>();
    }
    auto const& iv = j.at("involutions");
    r.involutions  = InvolutionReport{
        iv.at("n_tau_order").get<std::size_t>(),
        iv.at("n_tau_index").get<std::size_t>(),
        iv.at("group_gen_by_involutions").get<bool>(),
        iv.at("index_bound_holds").get<bool>()};
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  }

  // ---- text -----------------------------------------------------------------

  inline std::string render_text(AnalysisReport const& r) {
    std::ostringstream os;
    auto row = [&](std::string const& k, std::string const& v) {
      os << "  " << k << std::string(k.size() < 26 ? 26 - k.size() : 1, ' ')
         << v << '\n';
    };
    auto counts = [](std::map<std::size_t, std::size_t> const& m) {
      std::string s;
      for (auto [k, v] : m) {
        s += (s.empty() ? "" : ", ") + std::to_string(k) + ": "
             + std::to_string(v);
      }
      return s.empty() ? std::string("-") : s;
    };
    row("group order", std::to_string(r.group_order));
    row("type", detail::type_string(r.schlafli));
    row("polytopal", r.polytopal ? "yes" : "no");
    row("chirality", to_string(r.chirality));
    if (r.self_duality) {
      row("self-duality", to_string(*r.self_duality));
    }
    if (r.petrie) {
      row("petrie (left, right)", std::to_string(r.petrie->left) + ", "
                                      + std::to_string(r.petrie->right));
    }
    if (r.f_vector) {
      row("f-vector (V, E, F)", std::to_string(r.f_vector->vertices) + ", "
                                    + std::to_string(r.f_vector->edges) + ", "
                                    + std::to_string(r.f_vector->faces));
    }
    if (r.euler) {
      row("euler characteristic", std::to_string(*r.euler));
    }
    if (r.f_vector) {
      row("genus", r.genus ? std::to_string(*r.genus) : "unknown");
    }
    if (r.schlafli.size() == 2) {
      row("holes", counts(r.holes));
    }
    if (r.zigzags) {
      row("zigzags", counts(*r.zigzags));
    }
    row("N(s1 s2) order, index", std::to_string(r.involutions.n_tau_order) + ", "
                                     + std::to_string(r.involutions.n_tau_index));
    row("generated by involutions",
        r.involutions.group_gen_by_involutions ? "yes" : "no");
    row("index bound consistent", r.involutions.index_bound_holds ? "yes" : "no");
    for (auto const& w : r.warnings) {
      os << "  warning: " << w << '\n';
    }
    return os.str();
  }

}  // namespace rotamap

#endif  // ROTAMAP_REPORT_HPP_
