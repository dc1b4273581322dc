#include "flagcert/bad_family.hpp"

#include <utility>

#include "flagcert/enumerate.hpp"
#include "flagcert/error.hpp"

namespace flagcert {

std::optional<TriangleShape> triangle_shape(const ColouredGraph& g) {
  if (g.order() != 4) throw DimensionError("triangle shapes are defined on 4 vertices");
  const int k = g.num_colours();
  for (int c = 1; c <= k; ++c) {
    bool has_triangle = false;
    for (int skip = 0; skip < 4 && !has_triangle; ++skip) {
      int t[3];
      int j = 0;
      for (int v = 0; v < 4; ++v) {
        if (v != skip) t[j++] = v;
      }
      has_triangle = g.colour(t[0], t[1]) == c && g.colour(t[0], t[2]) == c && g.colour(t[1], t[2]) == c;
    }
    if (!has_triangle) continue;
    std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
    for (int u = 0; u < 4; ++u) {
      for (int v = u + 1; v < 4; ++v) ++count[g.colour(u, v)];
    }
    std::vector<int> others;
    for (int d = 1; d <= k; ++d) {
      if (d != c) others.push_back(count[static_cast<std::size_t>(d)]);
    }
    others.resize(2, 0);
    if (others[0] < others[1]) std::swap(others[0], others[1]);
    return TriangleShape{static_cast<Colour>(c), count[static_cast<std::size_t>(c)] - 3, others[0], others[1]};
  }
  return std::nullopt;
}

bool is_bad_shape(const TriangleShape& s) {
  return (s.extra == 2 && s.major == 1 && s.minor == 0) || (s.extra == 1 && s.major == 1 && s.minor == 1) ||
         (s.extra == 0 && s.major == 2 && s.minor == 1);
}

std::vector<ColouredGraph> bad_family() {
  std::vector<ColouredGraph> out;
  for (auto& g : enumerate_models(4, 3)) {
    auto shape = triangle_shape(g);
    if (shape && is_bad_shape(*shape)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace flagcert
