#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "flagcert/rational.hpp"

namespace flagcert {

/// Dense symmetric matrix of exact rationals. Storage is full; set() writes both triangles.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim);

  static SymMatrix identity(std::size_t dim);

  /// Builds from full rows. Throws StructureError naming the first (i,j) with
  /// rows[i][j] != rows[j][i], or DimensionError when rows are not square.
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  void set(std::size_t i, std::size_t j, const Rational& value);

  /// vᵀ M v.
  Rational quadratic_form(std::span<const Rational> v) const;

  SymMatrix operator-() const;
  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator-=(const SymMatrix& other);
  SymMatrix scaled(const Rational& factor) const;

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace flagcert
