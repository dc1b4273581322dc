#pragma once

#include <optional>
#include <vector>

#include "flagcert/coloured_graph.hpp"

namespace flagcert {

/// Edge profile of a 4-vertex colouring with a monochromatic triangle in `colour`:
/// `extra` further edges of that colour, then the other two colour counts with
/// major >= minor.
struct TriangleShape {
  Colour colour;
  int extra;
  int major;
  int minor;

  friend bool operator==(const TriangleShape&, const TriangleShape&) = default;
};

/// std::nullopt when g has no monochromatic triangle. Requires order 4.
std::optional<TriangleShape> triangle_shape(const ColouredGraph& g);

/// True for shapes (2,1,0), (1,1,1) and (0,2,1).
bool is_bad_shape(const TriangleShape& shape);

/// The 4-vertex "bad" family, one canonical representative per class, sorted by key.
std::vector<ColouredGraph> bad_family();

}  // namespace flagcert
