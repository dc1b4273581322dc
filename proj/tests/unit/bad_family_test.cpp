#include <gtest/gtest.h>

#include <array>
#include <map>

#include "flagcert/bad_family.hpp"
#include "flagcert/canonical.hpp"
#include "oracles.hpp"

using flagcert::ColouredGraph;

namespace {

// (i, j, k) profile computed from scratch, or i = -1 without a monochromatic triangle.
std::array<int, 3> profile(const ColouredGraph& g) {
  for (int c = 1; c <= 3; ++c) {
    bool tri = false;
    for (const auto& t : oracle::subsets(4, 3)) {
      tri = tri || (g.colour(t[0], t[1]) == c && g.colour(t[0], t[2]) == c && g.colour(t[1], t[2]) == c);
    }
    if (!tri) continue;
    int count[4] = {0, 0, 0, 0};
    for (const auto& e : oracle::subsets(4, 2)) ++count[g.colour(e[0], e[1])];
    std::vector<int> others;
    for (int d = 1; d <= 3; ++d) {
      if (d != c) others.push_back(count[d]);
    }
    return {count[c] - 3, std::max(others[0], others[1]), std::min(others[0], others[1])};
  }
  return {-1, 0, 0};
}

bool wanted(const std::array<int, 3>& p) {
  return p == std::array<int, 3>{2, 1, 0} || p == std::array<int, 3>{1, 1, 1} || p == std::array<int, 3>{0, 2, 1};
}

}  // namespace

TEST(BadFamily, MatchesFilteredLabelledColourings) {
  std::vector<ColouredGraph> reps;
  std::map<std::array<int, 3>, int> per_profile;
  for (const auto& g : oracle::all_colourings(4, 3)) {
    if (!wanted(profile(g))) continue;
    bool seen = false;
    for (const auto& r : reps) seen = seen || oracle::isomorphic(g, r);
    if (!seen) {
      reps.push_back(g);
      ++per_profile[profile(g)];
    }
  }
  const auto family = flagcert::bad_family();
  ASSERT_EQ(family.size(), reps.size());
  for (const auto& r : reps) {
    bool found = false;
    for (const auto& h : family) found = found || oracle::isomorphic(r, h);
    EXPECT_TRUE(found);
  }
  // Per triangle colour: (2,1,0) and (0,2,1) have two choices of which other
  // colour is the major one, (1,1,1) has a single class.
  EXPECT_EQ(per_profile[(std::array<int, 3>{2, 1, 0})], 6);
  EXPECT_EQ(per_profile[(std::array<int, 3>{1, 1, 1})], 3);
  EXPECT_EQ(per_profile[(std::array<int, 3>{0, 2, 1})], 6);
  EXPECT_EQ(family.size(), 15u);
}

TEST(BadFamily, MembersHaveATriangleAndExcludeMonochromaticK4) {
  for (const auto& h : flagcert::bad_family()) {
    EXPECT_EQ(h.order(), 4);
    const auto shape = flagcert::triangle_shape(h);
    ASSERT_TRUE(shape.has_value());
    EXPECT_TRUE(flagcert::is_bad_shape(*shape));
    EXPECT_GE(shape->major, shape->minor);
    EXPECT_NE(flagcert::canonical_key(h), flagcert::canonical_key(ColouredGraph(4)));
  }
  const auto red_shape = flagcert::triangle_shape(ColouredGraph(4));
  ASSERT_TRUE(red_shape.has_value());
  EXPECT_EQ(*red_shape, (flagcert::TriangleShape{flagcert::kRed, 3, 0, 0}));
  EXPECT_FALSE(flagcert::is_bad_shape(*red_shape));
}
