#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/coefficient_table.hpp"
#include "flagcert/psd.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

/// λ_k = p(mono triangle, M_k) - bound - Σ_r Σ_ij Q^r_ij A[r][k][i][j], keyed by model.
std::map<CanonicalKey, Rational> lambda_vector(const Certificate& cert, const CoefficientTable& table);

struct BlockVerdict {
  std::size_t block = 0;  // 1-based
  PsdVerdict verdict;
};

/// A bad-family graph H occurring in M_k although λ_k = 0 (or below).
struct HViolation {
  CanonicalKey bad_graph;
  CanonicalKey model;
  Rational lambda;
};

struct VerificationReport {
  Rational bound;
  std::vector<BlockVerdict> blocks;
  std::map<CanonicalKey, Rational> lambda;
  Rational min_lambda;
  CanonicalKey argmin_lambda;
  std::size_t zero_lambdas = 0;
  std::vector<CanonicalKey> negative_lambdas;
  std::vector<HViolation> h_violations;
  double seconds = 0.0;

  bool all_psd() const;
  bool lambdas_nonnegative() const { return negative_lambdas.empty(); }
  bool h_condition() const { return h_violations.empty(); }
  bool verified() const { return all_psd() && lambdas_nonnegative() && h_condition(); }

  /// One line per failed check, naming the block or model involved.
  std::vector<std::string> failures() const;
};

VerificationReport verify(const Certificate& cert, unsigned threads = 1);
VerificationReport verify(const Certificate& cert, const CoefficientTable& table);

/// Human-readable summary.
std::string render_text(const VerificationReport& report);

/// "key=value" lines closed by "VERDICT VERIFIED" or "VERDICT FAILED".
std::string render_structured(const VerificationReport& report);

struct ExtremalZeroEntry {
  CanonicalKey model;
  Rational lambda;
  bool occurs = false;  // induced somewhere in G_ex(gex_order)
};

/// For every 5-vertex model: λ and whether it is induced in G_ex(gex_order).
std::vector<ExtremalZeroEntry> extremal_zero_report(const Certificate& cert, const CoefficientTable& table,
                                                    int gex_order = 25);

}  // namespace flagcert
