#ifndef ROTAMAP_CATALOG_HPP_
#define ROTAMAP_CATALOG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "presentation.hpp"
#include "report.hpp"
#include "torus.hpp"

namespace rotamap {

  // A named presentation with the values its analysis must reproduce.
  // `expected` may hold three parts, each optional:
  //   "report"       subset of the analysis report of the presentation
  //   "construction" subset of the report of its Petrie-Coxeter type map
  //   "group"        {"center_order", "derived_index"} of the whole group
  struct CatalogEntry {
    std::string    name;
    std::string    description;
    Presentation   presentation;
    nlohmann::json expected;
  };

  inline Presentation simplex333_presentation() {
    return parse_presentation(R"(gens r0 r1 r2 r3
rel r0^2
rel r1^2
rel r2^2
rel r3^2
rel (r0 r1)^3
rel (r1 r2)^3
rel (r2 r3)^3
rel (r0 r2)^2
rel (r0 r3)^2
rel (r1 r3)^2
rho r0 r1 r2 r3
)");
  }

  inline Presentation simplex333_rotation_presentation() {
    return parse_presentation(R"(gens s1 s2 s3
rel s1^3
rel s2^3
rel s3^3
rel (s1 s2)^2
rel (s2 s3)^2
rel (s1 s2 s3)^2
sigma s1 s2 s3
)");
  }

  namespace detail {
    inline Presentation add_relator(Presentation p, std::string const& word) {
      p.add_relator(parse_word(word, p));
      return p;
    }

    inline Presentation central_quotient_presentation(Presentation const& p) {
      auto const& w = p.distinguished()->words;
      auto q = central_quotient(RotationGroup4(enumerate(p), w[0], w[1], w[2]));
      return q.group.rep().presentation();
    }
  }  // namespace detail

  inline std::vector<CatalogEntry> catalog() {
    using nlohmann::json;
    using K = TorusKind;
    std::vector<CatalogEntry> c;

    auto ex1 = locally_toroidal_presentation({{K::t44, 1, 3}, {K::t44, 1, 3}});
    c.push_back({"ex1", "{{4,4}_(1,3),{4,4}_(1,3)}, improperly self-dual", ex1,
                 {{"report",
                   {{"group_order", 2000},
                    {"schlafli", {4, 4, 4}},
                    {"polytopal", true},
                    {"chirality", "chiral"},
                    {"self_duality", "improper"}}},
                  {"construction",
                   {{"group_order", 4000},
                    {"schlafli", {4, 8}},
                    {"holes", {{"2", 4}}},
                    {"chirality", "chiral"},
                    {"f_vector", {500, 2000, 1000}},
                    {"euler", -500},
                    {"genus", 251},
                    {"involutions", {{"group_gen_by_involutions", false}}}}}}});

    auto ex2 = locally_toroidal_presentation({{K::t63, 1, 2}, {K::t36, 2, 1}});
    auto ex2_construction = [](std::size_t order) {
      return json{{"group_order", order},
                  {"schlafli", {4, 6}},
                  {"holes", {{"2", 6}}},
                  {"chirality", "chiral"},
                  {"involutions", {{"group_gen_by_involutions", true}}}};
    };
    auto ex2_report = [](std::size_t order, std::size_t petrie) {
      return json{{"group_order", order},
                  {"schlafli", {6, 3, 6}},
                  {"polytopal", true},
                  {"chirality", "chiral"},
                  {"self_duality", "improper"},
                  {"petrie", {{"left", petrie}, {"right", petrie}}}};
    };
    c.push_back({"ex2", "{{6,3}_(1,2),{3,6}_(2,1)}, improperly self-dual", ex2,
                 {{"report", ex2_report(20160, 28)},
                  {"construction", ex2_construction(40320)}}});
    c.push_back({"ex2q14", "ex2 with Petrie polygons of length 14",
                 detail::add_relator(ex2, "(s1 s3)^14"),
                 {{"report", ex2_report(10080, 14)},
                  {"construction", ex2_construction(20160)}}});
    c.push_back({"ex2q7", "ex2 with Petrie polygons of length 7",
                 detail::add_relator(ex2, "(s1 s3)^7"),
                 {{"report", ex2_report(5040, 7)},
                  {"construction", ex2_construction(10080)},
                  {"group", {{"center_order", 1}, {"derived_index", 2}}}}});

    auto ex3 = locally_toroidal_presentation({{K::t36, 1, 2}, {K::t63, 1, 2}});
    c.push_back({"ex3", "{{3,6}_(1,2),{6,3}_(1,2)}, properly self-dual", ex3,
                 {{"report",
                   {{"group_order", 672},
                    {"schlafli", {3, 6, 3}},
                    {"polytopal", true},
                    {"chirality", "chiral"},
                    {"self_duality", "proper"},
                    {"petrie", {{"left", 8}, {"right", 14}}}}},
                  {"construction",
                   {{"group_order", 1344},
                    {"schlafli", {3, 16}},
                    {"chirality", "regular"},
                    {"zigzags", {{"1", 28}, {"2", 6}}},
                    {"f_vector", {42, 336, 224}},
                    {"euler", -70},
                    {"genus", 36}}},
                  {"group", {{"center_order", 2}}}}});
    c.push_back({"ex3-central-quotient", "ex3 modulo its centre of order 2",
                 detail::central_quotient_presentation(ex3),
                 {{"report",
                   {{"group_order", 336},
                    {"schlafli", {3, 6, 3}},
                    {"self_duality", "proper"}}},
                  {"construction",
                   {{"group_order", 672},
                    {"schlafli", {3, 8}},
                    {"chirality", "regular"},
                    {"zigzags", {{"1", 14}}},
                    {"f_vector", {42, 168, 112}}}}}});

    c.push_back({"simplex333", "regular 4-simplex {3,3,3} as a C-group",
                 simplex333_presentation(),
                 {{"report",
                   {{"group_order", 120},
                    {"schlafli", {3, 3, 3}},
                    {"polytopal", true},
                    {"chirality", "regular"},
                    {"self_duality", "regular-polarity"}}},
                  {"construction",
                   {{"group_order", 240},
                    {"schlafli", {4, 6}},
                    {"holes", {{"2", 3}}},
                    {"chirality", "regular"},
                    {"f_vector", {20, 60, 30}},
                    {"euler", -10},
                    {"genus", 6}}}}});
    c.push_back({"simplex333-rotation", "rotation subgroup of {3,3,3}",
                 simplex333_rotation_presentation(),
                 {{"report",
                   {{"group_order", 60},
                    {"schlafli", {3, 3, 3}},
                    {"chirality", "regular"}}}}});

    auto torus = [&](TorusFamily t, json report) {
      auto o                  = lattice_torus_oracle(t);
      report["group_order"]   = o.order;
      report["f_vector"]      = {o.f_vector.vertices, o.f_vector.edges,
                                 o.f_vector.faces};
      std::string k           = t.kind == K::t44 ? "44" : t.kind == K::t36 ? "36" : "63";
      c.push_back({"torus-" + k + "-" + std::to_string(t.b) + "-"
                       + std::to_string(t.c),
                   "torus map " + t.name(), torus_presentation(t),
                   {{"report", report}}});
    };
    torus({K::t44, 1, 0}, {{"polytopal", false}, {"chirality", "not-polytopal"}});
    torus({K::t44, 1, 1}, {{"polytopal", false}, {"chirality", "not-polytopal"}});
    torus({K::t44, 2, 0}, {{"chirality", "regular"}});
    torus({K::t44, 1, 3},
          {{"chirality", "chiral"},
           {"involutions",
            {{"n_tau_index", 4}, {"group_gen_by_involutions", false}}}});
    torus({K::t36, 1, 2}, {{"chirality", "chiral"}});
    torus({K::t63, 1, 2}, {{"chirality", "chiral"}});
    return c;
  }

  inline std::optional<CatalogEntry> find_catalog_entry(std::string const& name) {
    for (auto& e : catalog()) {
      if (e.name == name) {
        return e;
      }
    }
    return std::nullopt;
  }

  namespace detail {
    // Records every place where `actual` disagrees with the keys present in
    // `expected`.
    inline void compare_subset(nlohmann::json const& expected,
                               nlohmann::json const& actual,
                               std::string const&    path,
                               std::vector<std::string>& out) {
      if (expected.is_object()) {
        for (auto const& [k, v] : expected.items()) {
          if (!actual.is_object() || !actual.contains(k)) {
            out.push_back(path + "/" + k + ": missing");
            continue;
          }
          compare_subset(v, actual[k], path + "/" + k, out);
        }
        return;
      }
      if (expected != actual) {
        out.push_back(path + ": expected " + expected.dump() + ", got "
                      + actual.dump());
      }
    }
  }  // namespace detail

  struct CatalogCheck {
    std::string              name;
    std::vector<std::string> mismatches;

    bool ok() const {
      return mismatches.empty();
    }
  };

  // Recompute an entry and compare it against its stored expectations.
  inline CatalogCheck verify(CatalogEntry const& e,
                             std::size_t         cap = default_coset_cap) {
    CatalogCheck out{e.name, {}};
    try {
      if (e.expected.contains("report")) {
        detail::compare_subset(e.expected["report"],
                               to_json(analyze(e.presentation, cap)), "report",
                               out.mismatches);
      }
      if (e.expected.contains("construction")) {
        auto c = construct_petrie_coxeter(e.presentation, cap);
        detail::compare_subset(e.expected["construction"], to_json(c.report),
                               "construction", out.mismatches);
      }
      if (e.expected.contains("group")) {
        auto           g = enumerate(e.presentation, cap);
        nlohmann::json actual;
        actual["center_order"] = center(*g).size();
        std::vector<Word> gens;
        for (std::uint32_t i = 0; i < g->num_generators(); ++i) {
          gens.push_back(Word::generator(i));
        }
        actual["derived_index"] = g->order() / derived_subgroup(*g, gens).size();
        detail::compare_subset(e.expected["group"], actual, "group",
                               out.mismatches);
      }
    } catch (Error const& err) {
      out.mismatches.push_back(std::string("error: ") + err.what());
    }
    return out;
  }

}  // namespace rotamap

#endif  // ROTAMAP_CATALOG_HPP_
