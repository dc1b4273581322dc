#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace flagcert {

using Colour = std::uint8_t;

// Colour convention: 1 = red, 2 = blue, 3 = green.
inline constexpr Colour kRed = 1;
inline constexpr Colour kBlue = 2;
inline constexpr Colour kGreen = 3;

/// Complete graph on n vertices (0-based) with every edge coloured from {1..k}.
/// The diagonal is 0 and the colour matrix is symmetric.
class ColouredGraph {
 public:
  ColouredGraph() = default;

  /// All edges coloured `fill`.
  explicit ColouredGraph(int order, int num_colours = 3, Colour fill = kRed);

  /// Validates symmetry, zero diagonal and the colour range; throws StructureError.
  static ColouredGraph from_matrix(const std::vector<std::vector<int>>& matrix, int num_colours = 3);

  int order() const { return n_; }
  int num_colours() const { return k_; }

  Colour colour(int u, int v) const { return colours_[static_cast<std::size_t>(u * n_ + v)]; }
  void set_colour(int u, int v, Colour c);

  /// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in the given order.
  ColouredGraph induced(std::span<const int> vertices) const;

  /// Vertex i of the result is vertex perm[i] of this graph.
  ColouredGraph relabelled(std::span<const int> perm) const;

  /// Applies a colour bijection; map[c] is the new colour of c (map[0] unused).
  ColouredGraph with_colours_permuted(std::span<const Colour> map) const;

  /// Row-major upper triangle, the byte order canonical keys are built from.
  std::vector<Colour> upper_triangle() const;

  friend bool operator==(const ColouredGraph&, const ColouredGraph&) = default;

 private:
  int n_ = 0;
  int k_ = 3;
  std::vector<Colour> colours_;
};

}  // namespace flagcert
