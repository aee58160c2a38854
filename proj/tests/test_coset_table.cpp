#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rotamap/coset_table.hpp"
#include "rotamap/group.hpp"

using namespace rotamap;

namespace {

  using Perm5 = std::array<int, 5>;

  // Right action: apply a, then b.
  Perm5 compose(Perm5 const& a, Perm5 const& b) {
    Perm5 r{};
    for (int i = 0; i < 5; ++i) {
      r[i] = b[a[i]];
    }
    return r;
  }
  Perm5 inverse(Perm5 const& a) {
    Perm5 r{};
    for (int i = 0; i < 5; ++i) {
      r[a[i]] = i;
    }
    return r;
  }
  constexpr Perm5 id5{0, 1, 2, 3, 4};

  Perm5 eval(Word const& w, std::vector<Perm5> const& gens) {
    Perm5 x = id5;
    for (auto l : w) {
      x = compose(x, l.inv ? inverse(gens[l.gen]) : gens[l.gen]);
    }
    return x;
  }

  std::set<Perm5> closure(std::vector<Perm5> const& gens) {
    std::set<Perm5>    seen{id5};
    std::vector<Perm5> queue{id5};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto const& g : gens) {
        auto y = compose(queue[i], g);
        if (seen.insert(y).second) {
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

  void expect_sound(GroupRep const& g) {
    auto const& t = g.table();
    ASSERT_TRUE(t.complete());
    ASSERT_EQ(t.num_rows(), g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      for (std::size_t c = 0; c < t.num_columns(); c += 2) {
        EXPECT_EQ(t.get(t.get(x, c), c + 1), x);
      }
      for (auto const& r : g.presentation().relators()) {
        EXPECT_EQ(g.multiply(ElementIndex{static_cast<std::uint32_t>(x)}, r).value,
                  x);
      }
    }
  }

}  // namespace

TEST(Enumerate, CyclicGroup) {
  auto g = enumerate(parse_presentation("gens a\nrel a^4"), 100);
  EXPECT_EQ(g->order(), 4u);
  expect_sound(*g);
}

TEST(Enumerate, TrivialAndFree) {
  EXPECT_EQ(enumerate(parse_presentation("gens a\nrel a"))->order(), 1u);
  EXPECT_EQ(enumerate(parse_presentation("gens a b\nrel a\nrel b"))->order(), 1u);
  EXPECT_THROW(enumerate(parse_presentation("gens a b"), 1000), CapExceeded);
}

TEST(Enumerate, NoGenerators) {
  EXPECT_THROW(enumerate_cosets(Presentation{}), PreconditionError);
}

TEST(Enumerate, InfiniteTessellationHitsCap) {
  // rotation group of the cubic tessellation {4,3,4}
  auto p = parse_presentation(
      "gens s1 s2 s3\nrel s1^4\nrel s2^3\nrel s3^4\nrel (s1 s2)^2\n"
      "rel (s2 s3)^2\nrel (s1 s2 s3)^2");
  try {
    enumerate(p, 20000);
    FAIL();
  } catch (CapExceeded const& e) {
    EXPECT_EQ(e.cap(), 20000u);
    EXPECT_GT(e.cosets_in_use(), 0u);
    EXPECT_NE(std::string(e.what()).find("--max-cosets"), std::string::npos);
  }
}

TEST(Enumerate, CapTooSmallForFiniteGroup) {
  EXPECT_THROW(enumerate(parse_presentation(fixtures::simplex_rotation), 30),
               CapExceeded);
}

// Oracle: find three 3-cycles of S5 satisfying the {3,3,3} rotation relations
// by brute force and close them to a permutation group.
TEST(Enumerate, SimplexRotationMatchesA5) {
  auto g = enumerate(parse_presentation(fixtures::simplex_rotation));
  ASSERT_EQ(g->order(), 60u);
  expect_sound(*g);

  std::vector<Perm5> three_cycles;
  for (int a = 0; a < 5; ++a) {
    for (int b = 0; b < 5; ++b) {
      for (int c = 0; c < 5; ++c) {
        if (a == b || b == c || a == c) {
          continue;
        }
        Perm5 p = id5;
        p[a] = b, p[b] = c, p[c] = a;
        three_cycles.push_back(p);
      }
    }
  }
  auto const& rels = g->presentation().relators();
  bool        found = false;
  for (auto const& x : three_cycles) {
    for (auto const& y : three_cycles) {
      for (auto const& z : three_cycles) {
        std::vector<Perm5> gens{x, y, z};
        if (!std::all_of(rels.begin(), rels.end(), [&](Word const& r) {
              return eval(r, gens) == id5;
            })) {
          continue;
        }
        auto perms = closure(gens);
        if (perms.size() != 60) {
          continue;
        }
        // The map element -> permutation is a well-defined bijection.
        std::set<Perm5> images;
        for (std::uint32_t i = 0; i < g->order(); ++i) {
          images.insert(eval(g->element_word(ElementIndex{i}), gens));
        }
        EXPECT_EQ(images.size(), 60u);
        found = true;
        break;
      }
      if (found) {
        break;
      }
    }
    if (found) {
      break;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Enumerate, LocallyToroidalOrders) {
  EXPECT_EQ(fixtures::group(fixtures::ex1)->order(), 2000u);
  EXPECT_EQ(fixtures::group(fixtures::ex3)->order(), 672u);
}

TEST(Enumerate, HexagonalPairOrder) {
  auto g = fixtures::group(fixtures::ex2);
  EXPECT_EQ(g->order(), 20160u);
  expect_sound(*g);
}

TEST(Enumerate, Deterministic) {
  for (auto text : {fixtures::ex1, fixtures::ex3, fixtures::simplex_rotation}) {
    auto p = parse_presentation(text);
    EXPECT_EQ(enumerate_cosets(p), enumerate_cosets(p));
  }
}

TEST(Enumerate, StandardisedNumbering) {
  // Rows are numbered breadth-first: the first time coset k appears in a
  // row-major scan, all cosets < k have appeared already.
  auto        g = fixtures::group(fixtures::ex1);
  auto const& t = g->table();
  std::size_t next = 1;
  for (std::size_t r = 0; r < t.num_rows(); ++r) {
    for (std::size_t c = 0; c < t.num_columns(); ++c) {
      auto v = t.get(r, c);
      if (v >= next) {
        EXPECT_EQ(v, next);
        ++next;
      }
    }
  }
}

TEST(Enumerate, SoundOnToroidalGroups) {
  expect_sound(*fixtures::group(fixtures::ex1));
  expect_sound(*fixtures::group(fixtures::ex3));
}

TEST(Enumerate, AddingRelatorsNeverGrows) {
  auto p = parse_presentation(fixtures::ex2);
  std::size_t last = enumerate(p)->order();
  for (auto extra : {"(s1 s3)^14", "(s1 s3)^7", "s1 s3 s1 s3"}) {
    p.add_relator(parse_word(extra, p));
    auto n = enumerate(p)->order();
    EXPECT_LE(n, last) << extra;
    EXPECT_EQ(last % n, 0u) << extra;
    last = n;
  }
}
