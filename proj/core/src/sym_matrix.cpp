#include "flagcert/sym_matrix.hpp"

#include <string>

#include "flagcert/error.hpp"

namespace flagcert {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1;
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t n = rows.size();
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw DimensionError("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw StructureError("matrix not symmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + "): " + rows[i][j].str() + " vs " + rows[j][i].str());
      }
      m.entries_[i * n + j] = rows[i][j];
      m.entries_[j * n + i] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  entries_[i * dim_ + j] = value;
  entries_[j * dim_ + i] = value;
}

Rational SymMatrix::quadratic_form(std::span<const Rational> v) const {
  if (v.size() != dim_) throw DimensionError("vector length does not match matrix dimension");
  Rational total;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!v[j].is_zero()) row += (*this)(i, j) * v[j];
    }
    total += v[i] * row;
  }
  return total;
}

SymMatrix SymMatrix::operator-() const {
  SymMatrix out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix dimensions differ");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

SymMatrix SymMatrix::scaled(const Rational& factor) const {
  SymMatrix out(*this);
  for (auto& e : out.entries_) e *= factor;
  return out;
}

}  // namespace flagcert
