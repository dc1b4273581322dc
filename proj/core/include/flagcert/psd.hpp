#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flagcert/sym_matrix.hpp"

namespace flagcert {

/// M = L·D·Lᵀ with L unit lower triangular (row-major, full n×n) and D diagonal.
struct LdlFactors {
  std::vector<std::vector<Rational>> lower;
  std::vector<Rational> diagonal;
};

enum class LdlFailureKind {
  kNegativePivot,
  kZeroPivotNonzeroRow,
};

/// Where symmetric elimination stopped. `row` is the pivot itself for a
/// negative pivot, or the first column j > pivot whose residual entry is nonzero.
struct LdlFailure {
  LdlFailureKind kind;
  std::size_t pivot;
  std::size_t row;
};

struct LdlResult {
  std::optional<LdlFactors> factors;
  std::optional<LdlFailure> failure;

  explicit operator bool() const { return factors.has_value(); }
};

/// Exact LDLᵀ without pivoting. A zero pivot is accepted only if the rest of its
/// residual row is zero, so success is equivalent to M being positive semidefinite.
LdlResult ldl_factor(const SymMatrix& m);

struct PsdVerdict {
  bool psd = false;
  /// Set when !psd: a rational vector with vᵀ M v < 0.
  std::vector<Rational> witness;
  std::optional<LdlFailure> failure;
};

PsdVerdict psd_check(const SymMatrix& m);

}  // namespace flagcert
