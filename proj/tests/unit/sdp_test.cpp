#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "flagcert/certificate.hpp"
#include "flagcert/coefficient_table.hpp"
#include "flagcert/error.hpp"
#include "flagcert/sdp.hpp"
#include "flagcert/verify.hpp"
#include "oracles.hpp"

using flagcert::BigInt;
using flagcert::NumericSolution;
using flagcert::Rational;
using flagcert::SolutionLayout;

namespace {

const flagcert::Certificate& shipped() {
  static const auto cert = flagcert::load_certificate_file(std::string(FLAGCERT_DATA_DIR) + "/appendix.cert");
  return cert;
}

const flagcert::CoefficientTable& table() {
  static const auto t = flagcert::coefficient_table(shipped(), 4);
  return t;
}

const flagcert::SdpProblem& problem() {
  static const auto p = flagcert::build_sdp(table());
  return p;
}

Rational q(long p, long d = 1) { return Rational(BigInt(p), BigInt(d)); }

NumericSolution from_certificate(const flagcert::Certificate& cert) {
  NumericSolution s;
  s.bound = cert.bound;
  for (const auto& b : cert.blocks) {
    std::vector<std::vector<Rational>> m(b.q.dim(), std::vector<Rational>(b.q.dim()));
    for (std::size_t i = 0; i < b.q.dim(); ++i) {
      for (std::size_t j = 0; j < b.q.dim(); ++j) m[i][j] = b.q(i, j);
    }
    s.blocks.push_back(std::move(m));
  }
  return s;
}

NumericSolution parse_text(const std::string& text, const SolutionLayout& layout = {}) {
  std::istringstream in(text);
  return flagcert::parse_solution(in, "mem", layout);
}

SolutionLayout tiny_layout() {
  SolutionLayout l;
  l.num_constraints = 2;
  l.flag_block_dims = {2, 2};
  return l;
}

}  // namespace

TEST(SdpExport, Layout) {
  const auto& p = problem();
  EXPECT_EQ(p.num_constraints, 792);
  ASSERT_EQ(p.block_sizes.size(), 11u);
  for (int r = 0; r < 10; ++r) EXPECT_EQ(p.block_sizes[static_cast<std::size_t>(r)], 27);
  EXPECT_EQ(p.block_sizes.back(), -793);
  const flagcert::SdpEntry objective{0, 11, 793, 793, q(1)};
  ASSERT_FALSE(p.entries.empty());
  EXPECT_EQ(p.entries.front(), objective);
  for (const auto& e : p.entries) {
    EXPECT_LE(e.i, e.j);
    if (e.block == 11) EXPECT_EQ(e.i, e.j);
  }
}

TEST(SdpExport, ConstraintsReproduceLambda) {
  // Plug the shipped Q into every constraint: the slack must come out as λ_k.
  const auto& p = problem();
  const auto lambda = flagcert::lambda_vector(shipped(), table());
  std::vector<Rational> lhs(792);
  std::vector<Rational> slack_coeff(792);
  std::vector<Rational> bound_coeff(792);
  for (const auto& e : p.entries) {
    if (e.matno == 0) continue;
    const auto k = static_cast<std::size_t>(e.matno - 1);
    if (e.block == 11) {
      if (e.i == 793) {
        bound_coeff[k] = e.value;
      } else {
        EXPECT_EQ(e.i, e.matno);
        slack_coeff[k] = e.value;
      }
      continue;
    }
    const auto& qr = shipped().blocks[static_cast<std::size_t>(e.block - 1)].q;
    const Rational x = qr(static_cast<std::size_t>(e.i - 1), static_cast<std::size_t>(e.j - 1));
    lhs[k] += e.i == e.j ? e.value * x : e.value * x * q(2);
  }
  for (std::size_t k = 0; k < 792; ++k) {
    const auto& m = table().models()[k];
    EXPECT_EQ(p.rhs[k], q(static_cast<long>(oracle::mono_triangles(m)), 10));
    EXPECT_EQ(slack_coeff[k], q(1));
    EXPECT_EQ(bound_coeff[k], q(1));
    EXPECT_EQ(lhs[k] + lambda.at(table().keys()[k]) + shipped().bound, p.rhs[k]) << k;
  }
}

TEST(SdpExport, RoundTripAtEmittedPrecision) {
  std::ostringstream out;
  flagcert::write_sdp(out, problem(), 40);
  std::istringstream in(out.str());
  const auto parsed = flagcert::parse_sdp(in);
  EXPECT_EQ(parsed.num_constraints, problem().num_constraints);
  EXPECT_EQ(parsed.block_sizes, problem().block_sizes);
  ASSERT_EQ(parsed.entries.size(), problem().entries.size());
  Rational tol(BigInt(1), BigInt("1000000000000000000000000000000000000000"));  // 1e-39
  auto close = [&](const Rational& a, const Rational& b) { return (a - b).abs() <= tol * b.abs(); };
  for (std::size_t k = 0; k < 792; ++k) EXPECT_TRUE(close(parsed.rhs[k], problem().rhs[k])) << k;
  for (std::size_t e = 0; e < parsed.entries.size(); ++e) {
    const auto& a = parsed.entries[e];
    const auto& b = problem().entries[e];
    ASSERT_EQ(std::tie(a.matno, a.block, a.i, a.j), std::tie(b.matno, b.block, b.i, b.j));
    EXPECT_TRUE(close(a.value, b.value)) << e;
  }
}

TEST(SdpExport, ParseErrors) {
  std::istringstream bad("\"comment\n2\n1\n2\n1 1\n1 1 1 1\n");
  EXPECT_THROW(flagcert::parse_sdp(bad), flagcert::ParseError);
  std::istringstream bad_block("1\n1\n2\n1\n0 3 1 1 1\n");
  EXPECT_THROW(flagcert::parse_sdp(bad_block), flagcert::ParseError);
}

TEST(Solution, WriteParseRoundTrip) {
  NumericSolution s;
  s.bound = q(1, 25);
  s.blocks = {{{q(1), q(-1, 2)}, {q(-1, 2), q(3)}}, {{q(0), q(0)}, {q(0), q(1, 4)}}};
  std::ostringstream out;
  flagcert::write_solution(out, s, tiny_layout());
  const auto back = parse_text(out.str(), tiny_layout());
  EXPECT_EQ(back.blocks, s.blocks);
  EXPECT_EQ(back.bound, s.bound);
}

TEST(Solution, Symmetrisation) {
  const auto s = parse_text(
      "0 0\n"
      "2 1 1 2 0.5\n"
      "2 1 2 1 0.25\n"
      "2 2 2 1 7\n"
      "1 1 1 1 99\n"
      "2 3 3 3 0.04\n",
      tiny_layout());
  EXPECT_EQ(s.blocks[0][0][1], q(3, 8));
  EXPECT_EQ(s.blocks[0][1][0], q(3, 8));
  EXPECT_EQ(s.blocks[1][0][1], q(7));
  EXPECT_EQ(s.blocks[0][0][0], q(0));
  EXPECT_EQ(s.bound, q(1, 25));
}

TEST(Solution, Errors) {
  EXPECT_THROW(parse_text("0\n2 1 1 1 1\n", tiny_layout()), flagcert::ParseError);
  try {
    parse_text("0 0\n2 1 1 1 1\n2 1 1\n", tiny_layout());
    FAIL();
  } catch (const flagcert::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_text("0 0\n1 1 1 1 1\n", tiny_layout()), flagcert::ParseError);
  EXPECT_THROW(parse_text("0 0\n2 1 3 1 1\n", tiny_layout()), flagcert::DimensionError);
  EXPECT_THROW(parse_text("0 0\n2 7 1 1 1\n", tiny_layout()), flagcert::DimensionError);
  EXPECT_THROW(parse_text("", tiny_layout()), flagcert::ParseError);
}

TEST(Rounding, ExactInputIsRecovered) {
  const auto cert = flagcert::round_solution(shipped(), from_certificate(shipped()), BigInt(4000000));
  for (std::size_t r = 0; r < 10; ++r) EXPECT_EQ(cert.blocks[r].q, shipped().blocks[r].q);
  EXPECT_EQ(cert.bound, q(1, 25));
}

TEST(Rounding, PerturbedInputIsRecovered) {
  std::mt19937_64 rng(71);
  auto s = from_certificate(shipped());
  const Rational eps(BigInt(1), BigInt(1000000000));
  for (auto& block : s.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i; j < block.size(); ++j) {
        const Rational d = eps * Rational(BigInt(static_cast<long>(rng() % 2001) - 1000), BigInt(1000));
        block[i][j] += d;
        if (i != j) block[j][i] = block[i][j];
      }
    }
  }
  std::ostringstream out;
  flagcert::write_solution(out, s, {}, 40);
  const auto parsed = parse_text(out.str());
  const auto cert = flagcert::round_solution(shipped(), parsed, BigInt(4000000));
  for (std::size_t r = 0; r < 10; ++r) EXPECT_EQ(cert.blocks[r].q, shipped().blocks[r].q) << r;
  EXPECT_TRUE(flagcert::verify(cert, table()).verified());
}

TEST(Rounding, CoarseOrEmptySolutionsFail) {
  const auto coarse = flagcert::round_solution(shipped(), from_certificate(shipped()), BigInt(1));
  EXPECT_FALSE(flagcert::verify(coarse, table()).verified());

  auto zero = from_certificate(shipped());
  for (auto& b : zero.blocks) {
    for (auto& row : b) {
      for (auto& x : row) x = Rational();
    }
  }
  const auto empty = flagcert::round_solution(shipped(), zero, BigInt(4000000));
  const auto report = flagcert::verify(empty, table());
  EXPECT_FALSE(report.verified());
  EXPECT_TRUE(report.all_psd());
}

TEST(Rounding, ConvergentMode) {
  auto s = from_certificate(shipped());
  s.blocks[0][0][0] = Rational::parse("0.9600000001");
  const auto grid = flagcert::round_solution(shipped(), s, BigInt(25), flagcert::RoundingMode::kGrid);
  const auto cf = flagcert::round_solution(shipped(), s, BigInt(25), flagcert::RoundingMode::kConvergent);
  EXPECT_EQ(grid.blocks[0].q(0, 0), q(24, 25));
  EXPECT_EQ(cf.blocks[0].q(0, 0), q(24, 25));
  EXPECT_THROW(flagcert::round_solution(shipped(), NumericSolution{}, BigInt(25)), flagcert::Error);
}
