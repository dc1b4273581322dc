#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/coloured_graph.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

/// Number of order-`order` vertex subsets of g inducing each isomorphism class.
std::map<CanonicalKey, std::uint64_t> induced_counts(const ColouredGraph& g, int order);

/// p(H, G): fraction of |H|-subsets of G that induce a copy of H.
/// Throws DimensionError when |H| > |G|.
Rational density(const ColouredGraph& h, const ColouredGraph& g);

/// Σ_{H ∈ family} p(H, G). Members must share one order and be pairwise
/// non-isomorphic (StructureError otherwise). An empty family has density 0.
Rational family_density(std::span<const ColouredGraph> family, const ColouredGraph& g);

struct TriangleCounts {
  std::vector<std::uint64_t> by_colour;  // index c-1
  std::uint64_t total = 0;
};

TriangleCounts mono_triangles(const ColouredGraph& g);

/// Monochromatic triangles K^3_c, one per colour c = 1..k.
std::vector<ColouredGraph> monochromatic_triangles_family(int num_colours = 3);

/// N_c(v): vertices joined to v by an edge of colour c. Throws std::out_of_range.
std::vector<int> neighbourhood(const ColouredGraph& g, int v, Colour c);

}  // namespace flagcert
