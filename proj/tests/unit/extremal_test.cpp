#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "flagcert/bad_family.hpp"
#include "flagcert/error.hpp"
#include "flagcert/extremal.hpp"
#include "flagcert/formulas.hpp"
#include "oracles.hpp"

using flagcert::ColouredGraph;
using flagcert::Rational;

namespace {

std::vector<std::size_t> sizes(const flagcert::ClassPartition& p) {
  std::vector<std::size_t> out;
  for (const auto& c : p.classes) out.push_back(c.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Five disjoint nonempty classes covering V, each a clique of p.colour.
bool valid_by_hand(const ColouredGraph& g, const flagcert::ClassPartition& p) {
  if (p.classes.size() != 5) return false;
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (const auto& c : p.classes) {
    if (c.empty()) return false;
    for (int v : c) ++hits[static_cast<std::size_t>(v)];
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (g.colour(c[a], c[b]) != p.colour) return false;
      }
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

ColouredGraph recolour(ColouredGraph g, const std::vector<std::pair<int, int>>& edges, flagcert::Colour c) {
  for (auto [u, v] : edges) g.set_colour(u, v, c);
  return g;
}

// Triangle colours present in g, by brute force.
std::set<flagcert::Colour> triangle_colours(const ColouredGraph& g) {
  std::set<flagcert::Colour> out;
  for (const auto& t : oracle::subsets(g.order(), 3)) {
    const auto c = g.colour(t[0], t[1]);
    if (c == g.colour(t[0], t[2]) && c == g.colour(t[1], t[2])) out.insert(c);
  }
  return out;
}

Rational bad_density(const ColouredGraph& g) {
  Rational sum;
  for (const auto& h : flagcert::bad_family()) sum += oracle::density(h, g);
  return sum;
}

std::size_t brute_automorphisms(const ColouredGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    count += g.relabelled(perm) == g;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::size_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::size_t>(n) * factorial(n - 1); }

}  // namespace

TEST(Pentagon, Shape) {
  const auto p = flagcert::pentagon_base();
  EXPECT_EQ(oracle::mono_triangles(p), 0u);
  for (int v = 0; v < 5; ++v) {
    int green = 0;
    for (int u = 0; u < 5; ++u) green += u != v && p.colour(u, v) == flagcert::kGreen;
    EXPECT_EQ(green, 2);
  }
  EXPECT_EQ(p.colour(0, 1), flagcert::kGreen);
  EXPECT_EQ(p.colour(4, 0), flagcert::kGreen);
  EXPECT_EQ(p.colour(0, 2), flagcert::kBlue);
}

TEST(Pentagon, UniqueTriangleFreeTwoColouring) {
  const auto p = flagcert::pentagon_base();
  int triangle_free = 0;
  for (const auto& g : oracle::all_colourings(5, 2)) {
    if (oracle::mono_triangles(g) != 0) continue;
    ++triangle_free;
    ColouredGraph h(5);
    for (int u = 0; u < 5; ++u) {
      for (int v = u + 1; v < 5; ++v) h.set_colour(u, v, g.colour(u, v) == 1 ? flagcert::kGreen : flagcert::kBlue);
    }
    EXPECT_TRUE(oracle::isomorphic(h, p));
  }
  EXPECT_EQ(triangle_free, 12);
}

TEST(BuildGex, Examples) {
  EXPECT_EQ(sizes(flagcert::gex_partition(11)), (std::vector<std::size_t>{3, 2, 2, 2, 2}));
  EXPECT_EQ(flagcert::gex_partition(11).classes[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(oracle::mono_triangles(flagcert::build_gex(11)), 1u);
  const auto g5 = flagcert::build_gex(5);
  EXPECT_EQ(oracle::mono_triangles(g5), 0u);
  EXPECT_EQ(g5, flagcert::pentagon_base());
  EXPECT_EQ(oracle::mono_triangles(flagcert::build_gex(20)), 20u);
  const auto g = flagcert::build_gex(15);
  EXPECT_EQ(g.colour(0, 1), flagcert::kRed);
  EXPECT_EQ(g.colour(0, 3), flagcert::kGreen);
  EXPECT_EQ(g.colour(0, 6), flagcert::kBlue);
}

TEST(BuildGex, OtherBases) {
  // Two blue classes joined in red: the 2-colour analogue.
  const ColouredGraph k2(2, 2, flagcert::kRed);
  const auto g = flagcert::build_gex(6, 2, k2);
  EXPECT_EQ(oracle::mono_triangles(g), static_cast<std::uint64_t>(flagcert::goodman(6)));
  EXPECT_EQ(g.colour(0, 1), flagcert::kBlue);
}

TEST(BuildGex, Errors) {
  EXPECT_THROW(flagcert::build_gex(4), flagcert::DimensionError);
  EXPECT_THROW(flagcert::build_gex(8, 3, ColouredGraph(5)), flagcert::StructureError);
  EXPECT_THROW(flagcert::build_gex(8, 2, flagcert::pentagon_base()), flagcert::StructureError);
}

TEST(BuildGexProperty, TriangleCountIdentity) {
  for (int n = 5; n <= 60; ++n) {
    const auto g = flagcert::build_gex(n);
    EXPECT_EQ(oracle::mono_triangles(g), static_cast<std::uint64_t>(flagcert::corollary_value(n))) << n;
    EXPECT_LE(triangle_colours(g).size(), 1u);
  }
}

TEST(Membership, GexIsMember) {
  for (int n = 5; n <= 12; ++n) {
    const auto g = flagcert::build_gex(n);
    const auto m = flagcert::is_member_gn(g);
    EXPECT_TRUE(m.member) << n;
    EXPECT_TRUE(m.complete);
    ASSERT_TRUE(m.partition.has_value());
    EXPECT_TRUE(valid_by_hand(g, *m.partition));
    const auto s = sizes(*m.partition);
    EXPECT_LE(s.front() - s.back(), 1u);
    EXPECT_TRUE(m.recoloured.empty());
  }
  EXPECT_THROW(flagcert::is_member_gn(ColouredGraph(4)), flagcert::DimensionError);
}

TEST(Membership, RecolouredMatching) {
  const auto gex = flagcert::build_gex(11);
  const auto second = recolour(gex, {{0, 3}, {5, 9}}, flagcert::kRed);
  EXPECT_EQ(oracle::mono_triangles(second), 1u);
  const auto m = flagcert::is_member_gn(second);
  EXPECT_TRUE(m.member);
  EXPECT_EQ(m.recoloured.size(), 2u);

  const auto star = recolour(gex, {{0, 3}, {0, 4}}, flagcert::kRed);
  EXPECT_EQ(oracle::mono_triangles(star), 2u);
  EXPECT_FALSE(flagcert::is_member_gn(star).member);
}

TEST(Membership, NonMembers) {
  EXPECT_FALSE(flagcert::is_member_gn(ColouredGraph(7)).member);
  std::mt19937_64 rng(61);
  for (int t = 0; t < 10; ++t) {
    const auto g = oracle::random_colouring(rng, 9);
    if (oracle::mono_triangles(g) != static_cast<std::uint64_t>(flagcert::corollary_value(9))) {
      EXPECT_FALSE(flagcert::is_member_gn(g).member);
    }
  }
}

TEST(MembershipProperty, ColourPermutationAndRelabelling) {
  std::mt19937_64 rng(62);
  const std::vector<std::vector<flagcert::Colour>> maps = {
      {0, 1, 3, 2}, {0, 2, 1, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}};
  const auto second = recolour(flagcert::build_gex(11), {{0, 3}, {5, 9}}, flagcert::kRed);
  for (const auto& map : maps) {
    for (const auto& g : {flagcert::build_gex(9), flagcert::build_gex(12), second}) {
      const auto h = oracle::random_relabel(rng, g.with_colours_permuted(map));
      const auto m = flagcert::is_member_gn(h);
      EXPECT_TRUE(m.member);
      ASSERT_TRUE(m.partition.has_value());
      EXPECT_EQ(m.partition->colour, map[flagcert::kRed]);
      EXPECT_TRUE(valid_by_hand(h, *m.partition));
    }
  }
}

TEST(MembershipProperty, MembersAvoidBadFamily) {
  std::mt19937_64 rng(63);
  const auto gex = flagcert::build_gex(10);
  const auto parts = flagcert::gex_partition(10).classes;
  for (int t = 0; t < 30; ++t) {
    // Recolour a random cross edge red; keep the graph if it is still a member.
    auto g = gex;
    for (int e = 0; e < 1 + t % 3; ++e) {
      const int u = static_cast<int>(rng() % 10);
      const int v = static_cast<int>(rng() % 10);
      if (u != v) g.set_colour(u, v, flagcert::kRed);
    }
    if (!flagcert::is_member_gn(g).member) continue;
    EXPECT_EQ(bad_density(g), Rational());
    EXPECT_LE(triangle_colours(g).size(), 1u);
  }
  EXPECT_EQ(bad_density(gex), Rational());
}

TEST(CliquePartition, Examples) {
  const auto g15 = flagcert::build_gex(15);
  const auto p15 = flagcert::clique_partition_5(g15);
  ASSERT_TRUE(p15.has_value());
  EXPECT_EQ(sizes(*p15), (std::vector<std::size_t>(5, 3)));
  EXPECT_TRUE(valid_by_hand(g15, *p15));

  const auto pentagon = flagcert::pentagon_base();
  const auto p5 = flagcert::clique_partition_5(pentagon);
  ASSERT_TRUE(p5.has_value());
  EXPECT_EQ(sizes(*p5), (std::vector<std::size_t>(5, 1)));

  const ColouredGraph blue6(6, 3, flagcert::kBlue);
  const auto p6 = flagcert::clique_partition_5(blue6);
  ASSERT_TRUE(p6.has_value());
  EXPECT_EQ(sizes(*p6), (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(p6->colour, flagcert::kBlue);
  EXPECT_TRUE(flagcert::is_valid_partition(blue6, *p6));

  EXPECT_FALSE(flagcert::clique_partition_5(ColouredGraph(4)).has_value());
}

TEST(CliquePartitionProperty, ReturnedPartitionsRevalidate) {
  std::mt19937_64 rng(64);
  int found = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 6 + t % 10;
    const auto g = t % 2 ? oracle::random_relabel(rng, flagcert::build_gex(n)) : oracle::random_colouring(rng, n);
    const auto p = flagcert::clique_partition_5(g);
    if (t % 2) EXPECT_TRUE(p.has_value()) << n;
    if (!p) continue;
    ++found;
    EXPECT_TRUE(valid_by_hand(g, *p));
  }
  EXPECT_GE(found, 20);
}

TEST(MaximalCliques, GexHasFiveRedCliques) {
  const auto g = flagcert::build_gex(25);
  const auto cliques = flagcert::maximal_mono_cliques(g);
  ASSERT_EQ(cliques.size(), 5u);
  for (const auto& c : cliques) {
    EXPECT_EQ(c.colour, flagcert::kRed);
    EXPECT_EQ(c.vertices.size(), 5u);
  }
  // Brute force: every monochromatic 4-set lies in a returned clique, and no
  // returned clique extends.
  for (const auto& s : oracle::subsets(25, 4)) {
    bool mono = true;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) mono = mono && g.colour(s[a], s[b]) == g.colour(s[0], s[1]);
    }
    if (!mono) continue;
    const bool covered = std::any_of(cliques.begin(), cliques.end(), [&](const auto& c) {
      return std::includes(c.vertices.begin(), c.vertices.end(), s.begin(), s.end());
    });
    EXPECT_TRUE(covered);
  }
  for (const auto& c : cliques) {
    for (int v = 0; v < 25; ++v) {
      if (std::find(c.vertices.begin(), c.vertices.end(), v) != c.vertices.end()) continue;
      const bool extends = std::all_of(c.vertices.begin(), c.vertices.end(), [&](int u) { return g.colour(u, v) == c.colour; });
      EXPECT_FALSE(extends);
    }
  }
}

TEST(MaximalCliques, SmallCases) {
  EXPECT_TRUE(flagcert::maximal_mono_cliques(flagcert::pentagon_base()).empty());
  const auto k6 = flagcert::maximal_mono_cliques(ColouredGraph(6));
  ASSERT_EQ(k6.size(), 1u);
  EXPECT_EQ(k6.front().vertices.size(), 6u);
  EXPECT_THROW(flagcert::maximal_mono_cliques(ColouredGraph(41)), flagcert::SizeLimitError);
  // Intersecting cliques: two red K4 sharing an edge.
  ColouredGraph g(6, 3, flagcert::kBlue);
  for (const auto& q : {std::vector<int>{0, 1, 2, 3}, std::vector<int>{2, 3, 4, 5}}) {
    for (int a : q) {
      for (int b : q) {
        if (a < b) g.set_colour(a, b, flagcert::kRed);
      }
    }
  }
  const auto both = flagcert::maximal_mono_cliques(g);
  EXPECT_EQ(std::count_if(both.begin(), both.end(), [](const auto& c) { return c.colour == flagcert::kRed; }), 2);
}

TEST(BruteMin, Examples) {
  const auto six = flagcert::brute_min_mono(6, 2);
  EXPECT_EQ(six.minimum, 2u);
  const auto five = flagcert::brute_min_mono(5, 3);
  EXPECT_EQ(five.minimum, 0u);
  const auto pentagon = flagcert::canonical_key(flagcert::pentagon_base());
  EXPECT_NE(std::find(five.minimisers.begin(), five.minimisers.end(), pentagon), five.minimisers.end());
  EXPECT_EQ(flagcert::brute_min_mono(6, 3).minimum, 0u);
  EXPECT_THROW(flagcert::brute_min_mono(8, 2), flagcert::SizeLimitError);
  EXPECT_THROW(flagcert::brute_min_mono(7, 3), flagcert::SizeLimitError);
}

TEST(BruteMinProperty, MatchesGoodmanWithCompleteMinimiserLists) {
  for (int n = 3; n <= 6; ++n) {
    const auto result = flagcert::brute_min_mono(n, 2);
    EXPECT_EQ(result.minimum, static_cast<std::uint64_t>(flagcert::goodman(n))) << n;
    // Orbit-stabiliser: the classes found must account for every labelled minimiser.
    std::uint64_t labelled = 0;
    std::uint64_t best = UINT64_MAX;
    for (const auto& g : oracle::all_colourings(n, 2)) {
      const auto t = oracle::mono_triangles(g);
      if (t < best) {
        best = t;
        labelled = 0;
      }
      labelled += t == best;
    }
    EXPECT_EQ(best, result.minimum);
    std::uint64_t covered = 0;
    for (const auto& rep : result.representatives) {
      EXPECT_EQ(oracle::mono_triangles(rep), best);
      covered += factorial(n) / brute_automorphisms(rep);
    }
    EXPECT_EQ(covered, labelled) << n;
    EXPECT_EQ(result.representatives.size(), result.minimisers.size());
  }
}
