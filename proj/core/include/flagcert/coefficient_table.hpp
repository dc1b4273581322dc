#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/certificate.hpp"
#include "flagcert/coloured_graph.hpp"
#include "flagcert/rational.hpp"
#include "flagcert/sym_matrix.hpp"

namespace flagcert {

/// A[r][k][i][j] = avg_coefficient(tau_r, F^r_i, F^r_j, M_k) for every block r
/// and every 5-vertex model M_k. Entries are stored as counts over the 120
/// equally likely (injection, split) outcomes. Blocks are 0-based here.
class CoefficientTable {
 public:
  static constexpr int kOutcomes = 120;

  CoefficientTable(std::vector<ColouredGraph> models, std::vector<std::size_t> block_dims);

  const std::vector<ColouredGraph>& models() const { return models_; }
  const std::vector<CanonicalKey>& keys() const { return keys_; }
  std::size_t num_blocks() const { return dims_.size(); }
  std::size_t num_models() const { return models_.size(); }
  std::size_t block_dim(std::size_t r) const { return dims_[r]; }

  std::optional<std::size_t> model_index(const CanonicalKey& key) const;

  std::uint16_t count(std::size_t r, std::size_t k, std::size_t i, std::size_t j) const {
    return counts_[offsets_[r] + k * dims_[r] * dims_[r] + i * dims_[r] + j];
  }
  std::uint16_t& count(std::size_t r, std::size_t k, std::size_t i, std::size_t j) {
    return counts_[offsets_[r] + k * dims_[r] * dims_[r] + i * dims_[r] + j];
  }

  Rational at(std::size_t r, std::size_t k, std::size_t i, std::size_t j) const;
  SymMatrix matrix(std::size_t r, std::size_t k) const;

  /// Σ_ij Q_ij A[r][k][i][j].
  Rational pair_sum(std::size_t r, std::size_t k, const SymMatrix& q) const;

 private:
  std::vector<ColouredGraph> models_;
  std::vector<CanonicalKey> keys_;
  std::map<CanonicalKey, std::size_t> index_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint16_t> counts_;
};

/// Fills the table by classifying the fourth vertex of each side through its
/// colour vector. Work is split over `threads` workers; the result does not
/// depend on the thread count.
CoefficientTable coefficient_table(const Certificate& cert, unsigned threads = 1);

}  // namespace flagcert
