#include <regex>
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rotamap/catalog.hpp"
#include "rotamap/report.hpp"

using namespace rotamap;

namespace {

  AnalysisReport analyze_text(char const* text) {
    return analyze(parse_presentation(text));
  }

  void expect_equal(AnalysisReport const& a, AnalysisReport const& b) {
    EXPECT_EQ(a.group_order, b.group_order);
    EXPECT_EQ(a.schlafli, b.schlafli);
    EXPECT_EQ(a.polytopal, b.polytopal);
    EXPECT_EQ(a.chirality, b.chirality);
    EXPECT_EQ(a.self_duality, b.self_duality);
    EXPECT_EQ(a.petrie, b.petrie);
    EXPECT_EQ(a.holes, b.holes);
    EXPECT_EQ(a.zigzags, b.zigzags);
    EXPECT_EQ(a.f_vector, b.f_vector);
    EXPECT_EQ(a.euler, b.euler);
    EXPECT_EQ(a.genus, b.genus);
    EXPECT_EQ(a.involutions.n_tau_order, b.involutions.n_tau_order);
    EXPECT_EQ(a.involutions.n_tau_index, b.involutions.n_tau_index);
    EXPECT_EQ(a.involutions.group_gen_by_involutions,
              b.involutions.group_gen_by_involutions);
    EXPECT_EQ(a.involutions.index_bound_holds, b.involutions.index_bound_holds);
    EXPECT_EQ(a.warnings, b.warnings);
  }

  // Value printed on the text row starting with `key`.
  std::string text_row(std::string const& text, std::string const& key) {
    std::regex  re("\\n?  " + key + " +([^\\n]*)");
    std::smatch m;
    if (!std::regex_search(text, m, re)) {
      return "";
    }
    return m[1];
  }

}  // namespace

TEST(Analyze, ProperlySelfDualTriangular) {
  auto r = analyze_text(fixtures::ex3);
  EXPECT_EQ(r.group_order, 672u);
  EXPECT_EQ(r.schlafli, (std::vector<std::size_t>{3, 6, 3}));
  EXPECT_TRUE(r.polytopal);
  EXPECT_EQ(r.chirality, Chirality::chiral);
  EXPECT_EQ(r.self_duality, DualityKind::proper);
  EXPECT_EQ(r.petrie, (PetrieLengths{8, 14}));
  EXPECT_FALSE(r.f_vector);
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Analyze, ImproperlySelfDualSquare) {
  auto r = analyze_text(fixtures::ex1);
  EXPECT_EQ(r.chirality, Chirality::chiral);
  EXPECT_EQ(r.schlafli, (std::vector<std::size_t>{4, 4, 4}));
  EXPECT_EQ(r.self_duality, DualityKind::improper);
}

TEST(Analyze, DegenerateTorus) {
  auto r = analyze(torus_presentation({TorusKind::t44, 1, 0}));
  EXPECT_FALSE(r.polytopal);
  EXPECT_EQ(r.chirality, Chirality::not_polytopal);
  EXPECT_EQ(r.f_vector, (FVector{1, 2, 1}));
  EXPECT_FALSE(r.warnings.empty());
}

TEST(Analyze, RegularCGroup) {
  auto r = analyze(simplex333_presentation());
  EXPECT_EQ(r.group_order, 120u);
  EXPECT_EQ(r.chirality, Chirality::regular);
  EXPECT_EQ(r.self_duality, DualityKind::regular_polarity);
}

TEST(Analyze, RegularMapRank3) {
  auto r = analyze_text("gens a b c\nrel a^2\nrel b^2\nrel c^2\nrel (a b)^4\n"
                        "rel (b c)^3\nrel (a c)^2\nrho a b c\n");
  EXPECT_EQ(r.group_order, 48u);
  EXPECT_EQ(r.f_vector, (FVector{8, 12, 6}));
  EXPECT_EQ(r.genus, 0);
  ASSERT_TRUE(r.zigzags);
  EXPECT_EQ(r.zigzags->at(1), 6u);
}

TEST(Analyze, CollapsedTypeWarns) {
  // s1^4 is nominal, but s2^3 = 1 and s1^2 s2^3 force s1^2 = 1
  auto r = analyze_text("gens s1 s2\nrel s1^4\nrel s2^3\nrel (s1 s2)^2\n"
                        "rel s1^2 s2^3\nsigma s1 s2\n");
  EXPECT_EQ(r.schlafli, (std::vector<std::size_t>{2, 3}));
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NE(r.warnings[0].find("collapses"), std::string::npos);
}

TEST(Analyze, NeedsDistinguishedLine) {
  EXPECT_THROW(analyze(parse_presentation("gens a\nrel a^2")), PreconditionError);
}

TEST(Analyze, UnsupportedRank) {
  EXPECT_THROW(analyze_text("gens a b c d\nrel a\nrel b\nrel c\nrel d\n"
                            "sigma a b c d\n"),
               PreconditionError);
}

TEST(Json, RoundTrip) {
  for (auto text : {fixtures::ex1, fixtures::ex3, fixtures::simplex_rotation}) {
    auto r = analyze_text(text);
    expect_equal(report_from_json(to_json(r)), r);
  }
  auto t = analyze(torus_presentation({TorusKind::t36, 1, 2}));
  expect_equal(report_from_json(to_json(t)), t);
  auto c = analyze(simplex333_presentation());
  expect_equal(report_from_json(nlohmann::json::parse(to_json(c).dump())), c);
}

TEST(Json, SchemaAndKeys) {
  auto j = to_json(analyze_text(fixtures::ex3));
  EXPECT_EQ(j["schema"], 1);
  for (auto key : {"group_order", "schlafli", "polytopal", "chirality",
                   "self_duality", "petrie", "holes", "zigzags", "f_vector",
                   "euler", "genus", "involutions", "warnings"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["chirality"], "chiral");
  EXPECT_EQ(j["self_duality"], "proper");
  EXPECT_TRUE(j["f_vector"].is_null());
  EXPECT_EQ(j["petrie"]["right"], 14);
}

TEST(Json, HoleKeysAreStrings) {
  auto j = to_json(analyze(torus_presentation({TorusKind::t36, 1, 2})));
  EXPECT_TRUE(j["holes"].contains("2"));
  EXPECT_TRUE(j["holes"].contains("3"));
}

TEST(Json, UnknownKeysIgnoredAndSchemaChecked) {
  auto j     = to_json(analyze_text(fixtures::ex1));
  j["extra"] = "ignored";
  EXPECT_EQ(report_from_json(j).group_order, 2000u);
  j["schema"] = 99;
  EXPECT_THROW(report_from_json(j), ParseError);
}

TEST(Text, AgreesWithJson) {
  for (auto const& p : {parse_presentation(fixtures::ex3),
                        torus_presentation({TorusKind::t44, 1, 3}),
                        simplex333_presentation()}) {
    auto r    = analyze(p);
    auto text = render_text(r);
    auto j    = to_json(r);
    EXPECT_EQ(text_row(text, "group order"), std::to_string(j["group_order"].get<int>()));
    EXPECT_EQ(text_row(text, "chirality"), j["chirality"].get<std::string>());
    auto idx = j["involutions"]["n_tau_index"].get<int>();
    EXPECT_NE(text_row(text, "N\\(s1 s2\\) order, index").find(std::to_string(idx)),
              std::string::npos);
    if (!j["f_vector"].is_null()) {
      auto f = j["f_vector"];
      EXPECT_EQ(text_row(text, "f-vector \\(V, E, F\\)"),
                std::to_string(f[0].get<int>()) + ", " + std::to_string(f[1].get<int>())
                    + ", " + std::to_string(f[2].get<int>()));
    }
  }
}

TEST(Text, WarningsPrinted) {
  auto text = render_text(analyze(torus_presentation({TorusKind::t44, 1, 0})));
  EXPECT_NE(text.find("warning:"), std::string::npos);
}

TEST(Construct, PetrieCoxeterOfSquareTorusPair) {
  auto c = construct_petrie_coxeter(parse_presentation(fixtures::ex1));
  EXPECT_EQ(c.base_order, 2000u);
  EXPECT_EQ(c.extended_order, 4000u);
  EXPECT_EQ(c.report.group_order, 4000u);
  EXPECT_EQ(c.report.schlafli, (std::vector<std::size_t>{4, 8}));
  EXPECT_EQ(c.report.holes.at(2), 4u);
  // the written presentation analyses to the same report
  auto again = analyze(parse_presentation(serialize(c.output)));
  expect_equal(again, c.report);
}

TEST(Construct, PetrieCoxeterOfTriangularPair) {
  auto c = construct_petrie_coxeter(parse_presentation(fixtures::ex3));
  EXPECT_EQ(c.report.chirality, Chirality::regular);
  EXPECT_EQ(c.report.schlafli, (std::vector<std::size_t>{3, 16}));
  EXPECT_EQ(c.report.zigzags->at(1), 28u);
  EXPECT_EQ(c.report.zigzags->at(2), 6u);
  EXPECT_EQ(c.output.distinguished()->kind, Distinguished::Kind::rho);
}

TEST(Construct, NotSelfDual) {
  auto p = parse_presentation(fixtures::four_cube);
  try {
    construct_petrie_coxeter(p);
    FAIL();
  } catch (PreconditionError const& e) {
    EXPECT_NE(std::string(e.what()).find("polarity"), std::string::npos);
  }
}

TEST(Construct, PetrieQuotient) {
  auto c = construct_quotient(parse_presentation(fixtures::ex2), 7);
  EXPECT_EQ(c.base_order, 20160u);
  EXPECT_EQ(c.report.group_order, 5040u);
  EXPECT_EQ(analyze(parse_presentation(serialize(c.output))).group_order, 5040u);
}

TEST(Construct, CentralQuotient) {
  auto c = construct_quotient(parse_presentation(fixtures::ex3), 0);
  EXPECT_EQ(c.report.group_order, 336u);
  EXPECT_EQ(c.report.self_duality, DualityKind::proper);
}

TEST(Catalog, EveryEntryVerifies) {
  auto entries = catalog();
  EXPECT_GE(entries.size(), 10u);
  for (auto const& e : entries) {
    auto r = verify(e);
    EXPECT_TRUE(r.ok()) << e.name << ": "
                        << (r.mismatches.empty() ? "" : r.mismatches.front());
  }
}

TEST(Catalog, RequiredEntries) {
  for (auto name : {"ex1", "ex2", "ex2q14", "ex2q7", "ex3", "ex3-central-quotient",
                    "simplex333"}) {
    EXPECT_TRUE(find_catalog_entry(name)) << name;
  }
  EXPECT_FALSE(find_catalog_entry("nope"));
  EXPECT_EQ(find_catalog_entry("ex1")->expected["report"]["group_order"], 2000);
}

TEST(Catalog, MismatchIsReported) {
  auto e                                = *find_catalog_entry("ex3");
  e.expected["report"]["group_order"]   = 671;
  auto r                                = verify(e);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.mismatches.front().find("group_order"), std::string::npos);
}

TEST(Catalog, SerializedEntriesReparse) {
  for (auto const& e : catalog()) {
    EXPECT_EQ(parse_presentation(serialize(e.presentation)), e.presentation) << e.name;
  }
}
