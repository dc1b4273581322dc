#include <gtest/gtest.h>

#include <random>

#include "flagcert/certificate.hpp"
#include "flagcert/coefficient_table.hpp"
#include "flagcert/enumerate.hpp"
#include "oracles.hpp"

using flagcert::BigInt;
using flagcert::ColouredGraph;
using flagcert::Rational;

namespace {

const flagcert::Certificate& shipped() {
  static const auto cert = flagcert::load_certificate_file(std::string(FLAGCERT_DATA_DIR) + "/appendix.cert");
  return cert;
}

const flagcert::CoefficientTable& table() {
  static const auto t = flagcert::coefficient_table(shipped(), 4);
  return t;
}

std::size_t index_of(const ColouredGraph& g) {
  const auto k = table().model_index(flagcert::canonical_key(g));
  EXPECT_TRUE(k.has_value());
  return *k;
}

// A[r][k][i][j] by direct enumeration of injections and single-vertex splits,
// deciding each side by reading off its colour vector.
Rational brute_entry(std::size_t r, const ColouredGraph& l, std::size_t i, std::size_t j) {
  const auto& block = shipped().blocks[r];
  const auto& tau = block.type.graph();
  long hits = 0;
  long total = 0;
  for (const auto& theta : oracle::injections(5, 3)) {
    std::vector<int> rest;
    for (int v = 0; v < 5; ++v) {
      if (std::find(theta.begin(), theta.end(), v) == theta.end()) rest.push_back(v);
    }
    bool induces = true;
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) induces = induces && l.colour(theta[a], theta[b]) == tau.colour(a, b);
    }
    for (int side = 0; side < 2; ++side) {
      ++total;
      if (!induces) continue;
      const int x = rest[side];
      const int y = rest[1 - side];
      const flagcert::ColourVector vx{l.colour(theta[0], x), l.colour(theta[1], x), l.colour(theta[2], x)};
      const flagcert::ColourVector vy{l.colour(theta[0], y), l.colour(theta[1], y), l.colour(theta[2], y)};
      if (vx == block.vectors[i] && vy == block.vectors[j]) ++hits;
    }
  }
  EXPECT_EQ(total, flagcert::CoefficientTable::kOutcomes);
  return Rational(BigInt(hits), BigInt(total));
}

}  // namespace

TEST(CoefficientTable, Shape) {
  EXPECT_EQ(table().num_blocks(), 10u);
  EXPECT_EQ(table().num_models(), 792u);
  for (std::size_t r = 0; r < 10; ++r) EXPECT_EQ(table().block_dim(r), 27u);
}

TEST(CoefficientTable, Examples) {
  const auto red = index_of(ColouredGraph(5));
  EXPECT_EQ(table().at(0, red, 0, 0), Rational(BigInt(1)));
  ColouredGraph one_green(5);
  one_green.set_colour(3, 4, flagcert::kGreen);
  EXPECT_EQ(table().at(0, index_of(one_green), 0, 0), Rational(BigInt(1), BigInt(10)));
  // No red edges at all, so the all-red type never embeds.
  ColouredGraph blue(5, 3, flagcert::kBlue);
  for (std::size_t i = 0; i < 27; ++i) EXPECT_EQ(table().at(0, index_of(blue), i, i), Rational());
}

TEST(CoefficientTable, AgreesWithDirectEnumeration) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const auto l = oracle::random_colouring(rng, 5, 1 + t % 3);
    const std::size_t r = rng() % 10;
    const std::size_t i = rng() % 27;
    const std::size_t j = rng() % 27;
    EXPECT_EQ(table().at(r, index_of(l), i, j), brute_entry(r, l, i, j));
  }
}

TEST(CoefficientTable, SymmetricAndSumsToInjectionShare) {
  for (std::size_t k = 0; k < 792; k += 7) {
    for (std::size_t r = 0; r < 10; ++r) {
      long sum = 0;
      for (std::size_t i = 0; i < 27; ++i) {
        for (std::size_t j = 0; j < 27; ++j) {
          EXPECT_EQ(table().count(r, k, i, j), table().count(r, k, j, i));
          sum += table().count(r, k, i, j);
        }
      }
      const auto& l = table().models()[k];
      const auto& tau = shipped().blocks[r].type.graph();
      long injections = 0;
      for (const auto& th : oracle::injections(5, 3)) {
        injections += l.colour(th[0], th[1]) == tau.colour(0, 1) && l.colour(th[0], th[2]) == tau.colour(0, 2) &&
                      l.colour(th[1], th[2]) == tau.colour(1, 2);
      }
      EXPECT_EQ(sum, injections * 2);
    }
  }
}

TEST(CoefficientTable, KeyRouteAgrees) {
  for (std::size_t k = 0; k < 792; k += 53) {
    for (std::size_t r = 0; r < 10; ++r) {
      const auto& b = shipped().blocks[r];
      const auto m = flagcert::avg_coefficient_matrix(b.type, b.flags, table().models()[k]);
      EXPECT_EQ(flagcert::SymMatrix::from_rows(m), table().matrix(r, k)) << "block " << r << " model " << k;
    }
  }
}

TEST(CoefficientTable, ThreadCountDoesNotMatter) {
  const auto single = flagcert::coefficient_table(shipped(), 1);
  for (std::size_t r = 0; r < 10; ++r) {
    for (std::size_t k = 0; k < 792; ++k) {
      for (std::size_t i = 0; i < 27; ++i) {
        for (std::size_t j = 0; j < 27; ++j) ASSERT_EQ(single.count(r, k, i, j), table().count(r, k, i, j));
      }
    }
  }
}

TEST(CoefficientTable, PairSumMatchesDefinition) {
  const auto& q = shipped().blocks[0].q;
  for (std::size_t k = 0; k < 792; k += 11) {
    Rational expected;
    for (std::size_t i = 0; i < 27; ++i) {
      for (std::size_t j = 0; j < 27; ++j) expected += q(i, j) * table().at(0, k, i, j);
    }
    EXPECT_EQ(table().pair_sum(0, k, q), expected);
  }
}
