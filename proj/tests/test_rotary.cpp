#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rotamap/catalog.hpp"
#include "rotamap/constructions.hpp"
#include "rotamap/rotary.hpp"
#include "rotamap/torus.hpp"

using namespace rotamap;

namespace {

  RotationGroup3 tetrahedron() {
    auto g = enumerate(parse_presentation("gens a b\nrel a^3\nrel b^3\nrel (a b)^2"));
    return RotationGroup3(g, s(0), s(1));
  }

  RotationGroup4 sigma_group(char const* text) {
    return RotationGroup4(fixtures::group(text), s(0), s(1), s(2));
  }

  RegularCGroup4 simplex() {
    return RegularCGroup4(enumerate(simplex333_presentation()), s(0), s(1), s(2),
                          s(3));
  }

}  // namespace

TEST(Rank3, TetrahedronInvariants) {
  auto m = tetrahedron();
  EXPECT_EQ(m.order(), 12u);
  EXPECT_EQ(schlafli(m), (std::array<std::size_t, 2>{3, 3}));
  EXPECT_TRUE(check_polytopal3(m));
  EXPECT_EQ(classify3(m), Chirality::regular);
  EXPECT_EQ(f_vector3(m), (FVector{4, 6, 4}));
  EXPECT_EQ(euler_genus(m), (EulerGenus{2, 0}));
}

TEST(Rank3, CollapsedRotationRejected) {
  auto g = enumerate(parse_presentation("gens a b\nrel a^3\nrel b\nrel (a b)^2"));
  EXPECT_THROW(RotationGroup3(g, s(0), s(1)), PreconditionError);
}

TEST(Rank3, HalfTurnMustBeInvolution) {
  auto g = enumerate(parse_presentation("gens a b\nrel a^2\nrel b^2\nrel (a b)^3"));
  EXPECT_THROW(RotationGroup3(g, s(0), s(1)), PreconditionError);
}

TEST(Rank3, DegenerateTorusIsNotPolytopal) {
  auto m = torus_map({TorusKind::t44, 1, 0});
  EXPECT_FALSE(check_polytopal3(m));
  EXPECT_EQ(classify3(m), Chirality::not_polytopal);
  EXPECT_EQ(f_vector3(m), (FVector{1, 2, 1}));
  EXPECT_EQ(euler_genus(m).euler, 0);
}

TEST(Rank3, HoleRange) {
  auto m = torus_map({TorusKind::t44, 1, 3});
  EXPECT_THROW(hole_length(m, 0), PreconditionError);
  EXPECT_THROW(hole_length(m, 3), PreconditionError);
  EXPECT_EQ(hole_length(m, 1), 4u);  // the face itself
}

TEST(Rank3, ChiralTorusNotGeneratedByInvolutions) {
  auto r = involution_report(torus_map({TorusKind::t44, 1, 3}));
  EXPECT_EQ(r.n_tau_index, 4u);
  EXPECT_FALSE(r.group_gen_by_involutions);
  EXPECT_TRUE(r.index_bound_holds);
}

TEST(Rank3, TriangularTorusInvolutionIndex) {
  // index pinned by the lattice brute force in the group tests
  auto r = involution_report(torus_map({TorusKind::t36, 1, 2}));
  EXPECT_EQ(r.n_tau_index, 3u);
  EXPECT_FALSE(r.group_gen_by_involutions);
}

TEST(Rank3, MapInvariantsAgree) {
  auto m   = torus_map({TorusKind::t36, 1, 2});
  auto inv = map_invariants(m);
  EXPECT_EQ(inv.schlafli, (std::array<std::size_t, 2>{3, 6}));
  EXPECT_EQ(inv.f_vector, f_vector3(m));
  EXPECT_EQ(inv.euler_genus, (EulerGenus{0, 1}));
  EXPECT_EQ(inv.holes.size(), 2u);  // j = 2, 3
  EXPECT_EQ(inv.chirality, Chirality::chiral);
  EXPECT_FALSE(inv.zigzags);
}

TEST(Rank4, SquareTorusPair) {
  auto m = sigma_group(fixtures::ex1);
  EXPECT_EQ(m.order(), 2000u);
  EXPECT_EQ(schlafli(m), (std::array<std::size_t, 3>{4, 4, 4}));
  EXPECT_TRUE(check_polytopal4(m));
  EXPECT_EQ(classify4(m), Chirality::chiral);
  EXPECT_EQ(petrie4(m).left, petrie4(m).right);
}

TEST(Rank4, HexagonalPairPetrie) {
  auto m = sigma_group(fixtures::ex2);
  EXPECT_EQ(petrie4(m), (PetrieLengths{28, 28}));
  EXPECT_EQ(classify4(m), Chirality::chiral);
}

TEST(Rank4, TriangularPairPetrie) {
  auto m = sigma_group(fixtures::ex3);
  EXPECT_EQ(schlafli(m), (std::array<std::size_t, 3>{3, 6, 3}));
  EXPECT_EQ(petrie4(m), (PetrieLengths{8, 14}));
  EXPECT_EQ(classify4(m), Chirality::chiral);
}

TEST(Rank4, SimplexRotationIsRegular) {
  auto m = sigma_group(fixtures::simplex_rotation);
  EXPECT_EQ(classify4(m), Chirality::regular);
  auto r = involution_report(m);
  EXPECT_TRUE(r.group_gen_by_involutions);
  EXPECT_LE(r.n_tau_index, 2u);
}

TEST(Rank4, IdentifyingS1AndS3BreaksPolytopality) {
  auto p = parse_presentation(fixtures::ex1);
  p.add_relator(parse_word("s1 s3^-1", p));
  RotationGroup4 m(enumerate(p), s(0), s(1), s(2));
  EXPECT_FALSE(check_polytopal4(m));
  EXPECT_EQ(classify4(m), Chirality::not_polytopal);
}

TEST(Rank4, RotationRelationsChecked) {
  auto g = enumerate(parse_presentation("gens a b c\nrel a^3\nrel b\nrel c"));
  EXPECT_THROW(RotationGroup4(g, s(0), s(1), s(2)), PreconditionError);
}

TEST(Regular, SimplexCGroup) {
  auto c = simplex();
  EXPECT_EQ(c.order(), 120u);
  auto r = rotation_subgroup(c);
  EXPECT_EQ(r.order(), 60u);
  EXPECT_EQ(schlafli(r), (std::array<std::size_t, 3>{3, 3, 3}));
  EXPECT_EQ(classify4(r), Chirality::regular);
}

TEST(Regular, NonInvolutionRejected) {
  auto g = enumerate(parse_presentation("gens a b c\nrel a^3\nrel b^2\nrel c^2"
                                        "\nrel (a b)^2\nrel (b c)^3\nrel (a c)^2"));
  EXPECT_THROW(RegularMap3(g, s(0), s(1), s(2)), PreconditionError);
}

TEST(Regular, NonCommutingRejected) {
  auto g = enumerate(parse_presentation("gens a b c\nrel a^2\nrel b^2\nrel c^2"
                                        "\nrel (a b)^2\nrel (b c)^3\nrel (a c)^3"));
  EXPECT_THROW(RegularMap3(g, s(0), s(1), s(2)), PreconditionError);
}

TEST(Regular, CubeMap) {
  // {4,3}: full octahedral group of order 48
  auto g = enumerate(parse_presentation("gens a b c\nrel a^2\nrel b^2\nrel c^2"
                                        "\nrel (a b)^4\nrel (b c)^3\nrel (a c)^2"));
  RegularMap3 m(g, s(0), s(1), s(2));
  EXPECT_EQ(m.order(), 48u);
  EXPECT_TRUE(m.is_c_group());
  EXPECT_EQ(f_vector3(m), (FVector{8, 12, 6}));
  EXPECT_EQ(euler_genus(m), (EulerGenus{2, 0}));
  EXPECT_EQ(zigzag_length(m, 1), 6u);  // Petrie hexagon
  EXPECT_THROW(zigzag_length(m, 0), PreconditionError);
  auto rot = m.rotations();
  EXPECT_EQ(rot.order(), 24u);
  EXPECT_EQ(schlafli(rot), (std::array<std::size_t, 2>{4, 3}));
  auto inv = map_invariants(m);
  EXPECT_EQ(inv.chirality, Chirality::regular);
  EXPECT_EQ(inv.zigzags->at(1), 6u);
}

TEST(Regular, HemicubeGenusUnknown) {
  // {4,3}_3: the hemicube is non-orientable
  auto g = enumerate(parse_presentation(
      "gens a b c\nrel a^2\nrel b^2\nrel c^2\nrel (a b)^4\nrel (b c)^3"
      "\nrel (a c)^2\nrel (a b c)^3"));
  RegularMap3 m(g, s(0), s(1), s(2));
  EXPECT_EQ(m.order(), 24u);
  EXPECT_EQ(f_vector3(m), (FVector{4, 6, 3}));
  auto eg = euler_genus(m);
  EXPECT_EQ(eg.euler, 1);
  EXPECT_FALSE(eg.genus);
}

TEST(Rank4, HalfTurnQuotientIsDihedral) {
  // generated by involutions, yet N(s1 s2) has index 4: the rank-3 bound
  // does not carry over, the index only divides 2p
  auto r = involution_report(sigma_group(fixtures::ex1));
  EXPECT_TRUE(r.group_gen_by_involutions);
  EXPECT_EQ(r.n_tau_index, 4u);
  EXPECT_TRUE(r.index_bound_holds);
}
