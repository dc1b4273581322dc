#include "flagcert/density.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "combinations.hpp"
#include "flagcert/error.hpp"

namespace flagcert {

std::map<CanonicalKey, std::uint64_t> induced_counts(const ColouredGraph& g, int order) {
  if (order > g.order()) {
    throw DimensionError("cannot take " + std::to_string(order) + "-subsets of a graph on " +
                         std::to_string(g.order()) + " vertices");
  }
  std::map<CanonicalKey, std::uint64_t> counts;
  detail::for_each_combination(g.order(), order, [&](std::span<const int> subset) {
    ++counts[canonical_key(g.induced(subset))];
  });
  return counts;
}

Rational density(const ColouredGraph& h, const ColouredGraph& g) {
  if (h.order() > g.order()) {
    throw DimensionError("density of a " + std::to_string(h.order()) + "-vertex graph in a " +
                         std::to_string(g.order()) + "-vertex graph");
  }
  const auto key = canonical_key(h);
  std::uint64_t hits = 0;
  detail::for_each_combination(g.order(), h.order(), [&](std::span<const int> subset) {
    if (canonical_key(g.induced(subset)) == key) ++hits;
  });
  return Rational(BigInt(static_cast<unsigned long>(hits)), binomial(g.order(), h.order()));
}

Rational family_density(std::span<const ColouredGraph> family, const ColouredGraph& g) {
  if (family.empty()) return Rational(0);
  const int order = family.front().order();
  std::set<CanonicalKey> keys;
  for (const auto& h : family) {
    if (h.order() != order) throw StructureError("family members have different orders");
    if (!keys.insert(canonical_key(h)).second) throw StructureError("family contains isomorphic members");
  }
  if (order > g.order()) {
    throw DimensionError("family order " + std::to_string(order) + " exceeds graph order " +
                         std::to_string(g.order()));
  }
  std::uint64_t hits = 0;
  detail::for_each_combination(g.order(), order, [&](std::span<const int> subset) {
    if (keys.contains(canonical_key(g.induced(subset)))) ++hits;
  });
  return Rational(BigInt(static_cast<unsigned long>(hits)), binomial(g.order(), order));
}

TriangleCounts mono_triangles(const ColouredGraph& g) {
  TriangleCounts out;
  out.by_colour.assign(static_cast<std::size_t>(g.num_colours()), 0);
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Colour c = g.colour(a, b);
      for (int d = b + 1; d < n; ++d) {
        if (g.colour(a, d) == c && g.colour(b, d) == c) {
          ++out.by_colour[static_cast<std::size_t>(c - 1)];
          ++out.total;
        }
      }
    }
  }
  return out;
}

std::vector<ColouredGraph> monochromatic_triangles_family(int num_colours) {
  std::vector<ColouredGraph> out;
  for (int c = 1; c <= num_colours; ++c) out.emplace_back(3, num_colours, static_cast<Colour>(c));
  return out;
}

std::vector<int> neighbourhood(const ColouredGraph& g, int v, Colour c) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (c < 1 || c > g.num_colours()) throw std::out_of_range("colour " + std::to_string(c) + " out of range");
  std::vector<int> out;
  for (int u = 0; u < g.order(); ++u) {
    if (u != v && g.colour(u, v) == c) out.push_back(u);
  }
  return out;
}

}  // namespace flagcert
