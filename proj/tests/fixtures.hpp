// Hand-written presentations shared by the test suites. They are typed out
// independently of the builders in constructions.hpp so the two can be
// compared.
#ifndef ROTAMAP_TESTS_FIXTURES_HPP_
#define ROTAMAP_TESTS_FIXTURES_HPP_

#include "rotamap/group.hpp"
#include "rotamap/presentation.hpp"

namespace fixtures {

  // {{4,4}_(1,3),{4,4}_(1,3)}
  inline constexpr char const* ex1 = R"(gens s1 s2 s3
rel s1^4
rel s2^4
rel s3^4
rel (s1 s2)^2
rel (s2 s3)^2
rel (s1 s2 s3)^2
rel (s2^-1 s1)(s2 s1^-1)^3
rel (s3^-1 s2)(s3 s2^-1)^3
sigma s1 s2 s3
)";

  // {{6,3}_(1,2),{3,6}_(2,1)}
  inline constexpr char const* ex2 = R"(gens s1 s2 s3
rel s1^6
rel s2^3
rel s3^6
rel (s1 s2)^2
rel (s2 s3)^2
rel (s1 s2 s3)^2
rel (s1^3 s2^-1 s1^-1)(s1^2 s2^-1)^2
rel (s3^-3 s2 s3)^2 (s3^-2 s2)
sigma s1 s2 s3
)";

  // {{3,6}_(1,2),{6,3}_(1,2)}
  inline constexpr char const* ex3 = R"(gens s1 s2 s3
rel s1^3
rel s2^6
rel s3^3
rel (s1 s2)^2
rel (s2 s3)^2
rel (s1 s2 s3)^2
rel (s2^-3 s1 s2)(s2^-2 s1)^2
rel (s2^3 s3^-1 s2^-1)(s2^2 s3^-1)^2
sigma s1 s2 s3
)";

  // rotation subgroup of the 4-simplex
  inline constexpr char const* simplex_rotation = R"(gens s1 s2 s3
rel s1^3
rel s2^3
rel s3^3
rel (s1 s2)^2
rel (s2 s3)^2
rel (s1 s2 s3)^2
sigma s1 s2 s3
)";

  // full symmetry group of the 4-cube {4,3,3}
  inline constexpr char const* four_cube = R"(gens a b c d
rel a^2
rel b^2
rel c^2
rel d^2
rel (a b)^4
rel (b c)^3
rel (c d)^3
rel (a c)^2
rel (a d)^2
rel (b d)^2
rho a b c d
)";

  inline rotamap::GroupPtr group(char const* text) {
    return rotamap::enumerate(rotamap::parse_presentation(text));
  }

}  // namespace fixtures

#endif
