#include "flagcert/psd.hpp"

namespace flagcert {
namespace {

// Right-looking symmetric elimination. On exit `schur` holds the trailing
// residual block from the step at which elimination stopped.
struct Elimination {
  std::vector<std::vector<Rational>> lower;
  std::vector<Rational> diagonal;
  std::vector<std::vector<Rational>> schur;
  std::optional<LdlFailure> failure;
};

Elimination eliminate(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Elimination el;
  el.lower.assign(n, std::vector<Rational>(n));
  el.schur.assign(n, std::vector<Rational>(n));
  el.diagonal.assign(n, Rational());
  for (std::size_t i = 0; i < n; ++i) {
    el.lower[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) el.schur[i][j] = m(i, j);
  }

  auto& s = el.schur;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational pivot = s[k][k];
    if (pivot.sign() < 0) {
      el.failure = LdlFailure{LdlFailureKind::kNegativePivot, k, k};
      return el;
    }
    if (pivot.is_zero()) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!s[k][j].is_zero()) {
          el.failure = LdlFailure{LdlFailureKind::kZeroPivotNonzeroRow, k, j};
          return el;
        }
      }
      continue;  // zero row and column: D_k = 0, L column stays e_k
    }
    el.diagonal[k] = pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (s[i][k].is_zero()) continue;
      el.lower[i][k] = s[i][k] / pivot;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational& factor = el.lower[i][k];
      if (factor.is_zero()) continue;
      for (std::size_t j = i; j < n; ++j) {
        if (s[k][j].is_zero()) continue;
        s[i][j] -= factor * s[k][j];
        if (j != i) s[j][i] = s[i][j];
      }
    }
    for (std::size_t i = k; i < n; ++i) {
      s[i][k] = Rational();
      s[k][i] = Rational();
    }
  }
  return el;
}

}  // namespace

LdlResult ldl_factor(const SymMatrix& m) {
  Elimination el = eliminate(m);
  LdlResult out;
  if (el.failure) {
    out.failure = el.failure;
    return out;
  }
  out.factors = LdlFactors{std::move(el.lower), std::move(el.diagonal)};
  return out;
}

PsdVerdict psd_check(const SymMatrix& m) {
  Elimination el = eliminate(m);
  PsdVerdict verdict;
  if (!el.failure) {
    verdict.psd = true;
    return verdict;
  }
  verdict.failure = el.failure;

  // With y = Lᵀv and y supported on the trailing block, vᵀMv = yᵀ S y.
  const std::size_t n = m.dim();
  const std::size_t k = el.failure->pivot;
  std::vector<Rational> y(n);
  if (el.failure->kind == LdlFailureKind::kNegativePivot) {
    y[k] = 1;
  } else {
    // S_kk = 0, S_kj != 0: y = t e_k + e_j gives 2 t S_kj + S_jj = -1 - |S_jj| + S_jj < 0.
    const std::size_t j = el.failure->row;
    const Rational& skj = el.schur[k][j];
    const Rational& sjj = el.schur[j][j];
    y[k] = -(sjj.abs() + 1) / (skj * 2);
    y[j] = 1;
  }
  // Back substitution Lᵀ v = y.
  std::vector<Rational> v(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = y[ii];
    for (std::size_t r = ii + 1; r < n; ++r) {
      if (!el.lower[r][ii].is_zero()) acc -= el.lower[r][ii] * v[r];
    }
    v[ii] = acc;
  }
  verdict.witness = std::move(v);
  return verdict;
}

}  // namespace flagcert
