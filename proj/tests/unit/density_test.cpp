#include <gtest/gtest.h>

#include <random>

#include "flagcert/bad_family.hpp"
#include "flagcert/density.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/error.hpp"
#include "flagcert/extremal.hpp"
#include "oracles.hpp"

using flagcert::BigInt;
using flagcert::ColouredGraph;
using flagcert::Rational;

namespace {
Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }
}  // namespace

TEST(Density, Examples) {
  EXPECT_EQ(flagcert::density(ColouredGraph(3), ColouredGraph(5)), q(1));
  for (const auto& tri : flagcert::monochromatic_triangles_family()) {
    EXPECT_EQ(flagcert::density(tri, flagcert::pentagon_base()), q(0));
  }
  ColouredGraph k4(4);
  k4.set_colour(0, 1, flagcert::kBlue);
  EXPECT_EQ(flagcert::density(ColouredGraph(3), k4), q(1, 2));
  EXPECT_EQ(oracle::density(ColouredGraph(3), k4), q(1, 2));
}

TEST(Density, TooLargeIsAnError) {
  EXPECT_THROW(flagcert::density(ColouredGraph(5), ColouredGraph(4)), flagcert::DimensionError);
}

TEST(Density, AgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const auto g = oracle::random_colouring(rng, 6, 2);
    const auto h = oracle::random_colouring(rng, 1 + t % 4, 2);
    EXPECT_EQ(flagcert::density(h, g), oracle::density(h, g));
  }
}

TEST(DensityProperty, InvariantUnderRelabelling) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_colouring(rng, 7);
    const auto h = oracle::random_colouring(rng, 3);
    const auto d = flagcert::density(h, g);
    EXPECT_EQ(flagcert::density(oracle::random_relabel(rng, h), oracle::random_relabel(rng, g)), d);
  }
}

TEST(DensityProperty, ModelDensitiesSumToOne) {
  std::mt19937_64 rng(23);
  for (int l = 3; l <= 5; ++l) {
    const auto models = flagcert::enumerate_models(l, 3);
    for (int t = 0; t < 3; ++t) {
      const auto g = oracle::random_colouring(rng, 7);
      Rational sum;
      for (const auto& m : models) sum += flagcert::density(m, g);
      EXPECT_EQ(sum, q(1));
      EXPECT_EQ(flagcert::family_density(models, g), q(1));
    }
  }
}

TEST(DensityProperty, TriangleCountMatchesFamilyDensity) {
  std::mt19937_64 rng(24);
  const auto family = flagcert::monochromatic_triangles_family();
  for (int t = 0; t < 30; ++t) {
    const int n = 3 + t % 6;
    const auto g = oracle::random_colouring(rng, n);
    const auto counts = flagcert::mono_triangles(g);
    EXPECT_EQ(counts.total, oracle::mono_triangles(g));
    EXPECT_EQ(Rational(BigInt(static_cast<unsigned long>(counts.total)), flagcert::binomial(n, 3)),
              flagcert::family_density(family, g));
  }
}

TEST(FamilyDensity, Examples) {
  EXPECT_EQ(flagcert::family_density(flagcert::monochromatic_triangles_family(), ColouredGraph(5)), q(1));
  EXPECT_EQ(flagcert::family_density({}, ColouredGraph(5)), q(0));

  const auto bad = flagcert::bad_family();
  const auto g10 = flagcert::build_gex(10);
  EXPECT_EQ(flagcert::family_density(bad, g10), q(0));
  // Brute force over every 4-subset of G_ex(10).
  for (const auto& s : oracle::subsets(10, 4)) {
    const auto sub = g10.induced(s);
    for (const auto& h : bad) EXPECT_FALSE(oracle::isomorphic(sub, h));
  }
}

TEST(FamilyDensity, RejectsIsomorphicMembers) {
  ColouredGraph a(3, 3, flagcert::kBlue);
  a.set_colour(0, 1, flagcert::kRed);
  ColouredGraph b(3, 3, flagcert::kBlue);
  b.set_colour(1, 2, flagcert::kRed);
  const std::vector<ColouredGraph> family{a, b};
  EXPECT_THROW(flagcert::family_density(family, ColouredGraph(5)), flagcert::StructureError);
}

TEST(MonoTriangles, Examples) {
  const auto red = flagcert::mono_triangles(ColouredGraph(5));
  EXPECT_EQ(red.by_colour, (std::vector<std::uint64_t>{10, 0, 0}));
  EXPECT_EQ(flagcert::mono_triangles(flagcert::pentagon_base()).total, 0u);
  const auto g11 = flagcert::mono_triangles(flagcert::build_gex(11));
  EXPECT_EQ(g11.total, 1u);
  EXPECT_EQ(g11.by_colour[0], 1u);
}

TEST(Neighbourhood, Examples) {
  EXPECT_EQ(flagcert::neighbourhood(ColouredGraph(5), 2, flagcert::kRed), (std::vector<int>{0, 1, 3, 4}));
  EXPECT_TRUE(flagcert::neighbourhood(ColouredGraph(5), 2, flagcert::kBlue).empty());
  EXPECT_EQ(flagcert::neighbourhood(flagcert::pentagon_base(), 1, flagcert::kGreen), (std::vector<int>{0, 2}));
  EXPECT_THROW(flagcert::neighbourhood(ColouredGraph(5), 5, flagcert::kRed), std::out_of_range);
  EXPECT_THROW(flagcert::neighbourhood(ColouredGraph(5), 0, 4), std::out_of_range);
}
