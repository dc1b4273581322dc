#include "flagcert/coefficient_table.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "flagcert/enumerate.hpp"
#include "flagcert/error.hpp"

namespace flagcert {
namespace {

// Index of a colour vector in {1,2,3}^3.
int vector_slot(Colour a, Colour b, Colour c) { return (a - 1) * 9 + (b - 1) * 3 + (c - 1); }

void fill_entry(CoefficientTable& table, std::size_t r, std::size_t k, const ColouredGraph& tau,
                const std::array<int, 27>& flag_of_slot) {
  const ColouredGraph& m = table.models()[k];
  const int n = m.order();
  for (int t0 = 0; t0 < n; ++t0) {
    for (int t1 = 0; t1 < n; ++t1) {
      if (t1 == t0 || m.colour(t0, t1) != tau.colour(0, 1)) continue;
      for (int t2 = 0; t2 < n; ++t2) {
        if (t2 == t0 || t2 == t1) continue;
        if (m.colour(t0, t2) != tau.colour(0, 2) || m.colour(t1, t2) != tau.colour(1, 2)) continue;
        int rest[2];
        int j = 0;
        for (int v = 0; v < n; ++v) {
          if (v != t0 && v != t1 && v != t2) rest[j++] = v;
        }
        const int fa = flag_of_slot[static_cast<std::size_t>(
            vector_slot(m.colour(rest[0], t0), m.colour(rest[0], t1), m.colour(rest[0], t2)))];
        const int fb = flag_of_slot[static_cast<std::size_t>(
            vector_slot(m.colour(rest[1], t0), m.colour(rest[1], t1), m.colour(rest[1], t2)))];
        if (fa < 0 || fb < 0) continue;
        // The two ways of assigning the remaining vertices to the sides.
        ++table.count(r, k, static_cast<std::size_t>(fa), static_cast<std::size_t>(fb));
        ++table.count(r, k, static_cast<std::size_t>(fb), static_cast<std::size_t>(fa));
      }
    }
  }
}

}  // namespace

CoefficientTable::CoefficientTable(std::vector<ColouredGraph> models, std::vector<std::size_t> block_dims)
    : models_(std::move(models)), dims_(std::move(block_dims)) {
  keys_.reserve(models_.size());
  for (std::size_t k = 0; k < models_.size(); ++k) {
    keys_.push_back(canonical_key(models_[k]));
    index_.emplace(keys_.back(), k);
  }
  std::size_t total = 0;
  for (std::size_t d : dims_) {
    offsets_.push_back(total);
    total += models_.size() * d * d;
  }
  counts_.assign(total, 0);
}

std::optional<std::size_t> CoefficientTable::model_index(const CanonicalKey& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational CoefficientTable::at(std::size_t r, std::size_t k, std::size_t i, std::size_t j) const {
  return Rational(BigInt(count(r, k, i, j)), BigInt(kOutcomes));
}

SymMatrix CoefficientTable::matrix(std::size_t r, std::size_t k) const {
  SymMatrix out(dims_[r]);
  for (std::size_t i = 0; i < dims_[r]; ++i) {
    for (std::size_t j = i; j < dims_[r]; ++j) out.set(i, j, at(r, k, i, j));
  }
  return out;
}

Rational CoefficientTable::pair_sum(std::size_t r, std::size_t k, const SymMatrix& q) const {
  if (q.dim() != dims_[r]) throw DimensionError("Q dimension does not match block " + std::to_string(r + 1));
  mpq_class sum = 0;
  for (std::size_t i = 0; i < dims_[r]; ++i) {
    for (std::size_t j = 0; j < dims_[r]; ++j) {
      const auto c = count(r, k, i, j);
      if (c != 0) sum += q(i, j).value() * c;
    }
  }
  sum /= kOutcomes;
  return Rational(BigInt(sum.get_num()), BigInt(sum.get_den()));
}

CoefficientTable coefficient_table(const Certificate& cert, unsigned threads) {
  std::vector<std::size_t> dims;
  std::vector<std::array<int, 27>> slots;
  for (const auto& block : cert.blocks) {
    dims.push_back(block.vectors.size());
    std::array<int, 27> slot;
    slot.fill(-1);
    for (std::size_t i = 0; i < block.vectors.size(); ++i) {
      const auto& v = block.vectors[i];
      slot[static_cast<std::size_t>(vector_slot(v[0], v[1], v[2]))] = static_cast<int>(i);
    }
    slots.push_back(slot);
  }
  CoefficientTable table(enumerate_models(5, 3), std::move(dims));

  const std::size_t jobs = table.num_blocks() * table.num_models();
  threads = std::max(1u, threads);
  // Each (r, k) cell is written by exactly one worker.
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t r = job / table.num_models();
      const std::size_t k = job % table.num_models();
      fill_entry(table, r, k, cert.blocks[r].type.graph(), slots[r]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return table;
}

}  // namespace flagcert
