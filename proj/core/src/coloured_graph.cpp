#include "flagcert/coloured_graph.hpp"

#include <string>

#include "flagcert/error.hpp"

namespace flagcert {

ColouredGraph::ColouredGraph(int order, int num_colours, Colour fill)
    : n_(order), k_(num_colours), colours_(static_cast<std::size_t>(order * order), fill) {
  if (order < 0) throw DimensionError("negative order");
  if (num_colours < 1 || num_colours > 255) throw StructureError("colour count must be in 1..255");
  if (order > 1 && (fill < 1 || fill > num_colours)) {
    throw StructureError("fill colour " + std::to_string(fill) + " outside 1.." + std::to_string(num_colours));
  }
  for (int i = 0; i < n_; ++i) colours_[static_cast<std::size_t>(i * n_ + i)] = 0;
}

ColouredGraph ColouredGraph::from_matrix(const std::vector<std::vector<int>>& matrix, int num_colours) {
  const int n = static_cast<int>(matrix.size());
  ColouredGraph g(n, num_colours, 1);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[static_cast<std::size_t>(i)].size()) != n) {
      throw StructureError("row " + std::to_string(i + 1) + " has wrong length");
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto& row = matrix[static_cast<std::size_t>(i)];
    if (row[static_cast<std::size_t>(i)] != 0) {
      throw StructureError("diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is not 0");
    }
    for (int j = i + 1; j < n; ++j) {
      const int c = row[static_cast<std::size_t>(j)];
      if (c != matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
        throw StructureError("colour matrix not symmetric at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")");
      }
      if (c < 1 || c > num_colours) {
        throw StructureError("colour " + std::to_string(c) + " at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") outside 1.." + std::to_string(num_colours));
      }
      g.set_colour(i, j, static_cast<Colour>(c));
    }
  }
  return g;
}

void ColouredGraph::set_colour(int u, int v, Colour c) {
  if (u == v) throw StructureError("cannot colour a loop");
  if (c < 1 || c > k_) throw StructureError("colour " + std::to_string(c) + " outside 1.." + std::to_string(k_));
  colours_[static_cast<std::size_t>(u * n_ + v)] = c;
  colours_[static_cast<std::size_t>(v * n_ + u)] = c;
}

ColouredGraph ColouredGraph::induced(std::span<const int> vertices) const {
  ColouredGraph out;
  out.n_ = static_cast<int>(vertices.size());
  out.k_ = k_;
  out.colours_.assign(vertices.size() * vertices.size(), 0);
  for (int i = 0; i < out.n_; ++i) {
    for (int j = 0; j < out.n_; ++j) {
      if (i != j) {
        out.colours_[static_cast<std::size_t>(i * out.n_ + j)] =
            colour(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);
      }
    }
  }
  return out;
}

ColouredGraph ColouredGraph::relabelled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DimensionError("permutation size does not match order");
  return induced(perm);
}

ColouredGraph ColouredGraph::with_colours_permuted(std::span<const Colour> map) const {
  if (static_cast<int>(map.size()) <= k_) throw DimensionError("colour map too short");
  ColouredGraph out(*this);
  for (auto& c : out.colours_) {
    if (c != 0) c = map[c];
  }
  return out;
}

std::vector<Colour> ColouredGraph::upper_triangle() const {
  std::vector<Colour> out;
  out.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) out.push_back(colour(i, j));
  }
  return out;
}

}  // namespace flagcert
