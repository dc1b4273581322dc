#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "flagcert/canonical.hpp"
#include "flagcert/coloured_graph.hpp"

namespace flagcert {

/// Five vertex classes, each a clique of `colour`.
struct ClassPartition {
  std::vector<std::vector<int>> classes;
  Colour colour = kRed;
};

/// K_5 with a green 5-cycle 0-1-2-3-4-0 and blue complement.
ColouredGraph pentagon_base();

/// Blow-up of `base` (default pentagon_base()) into classes of sizes
/// ceil(n/m) then floor(n/m), larger classes on lower vertex numbers. Cross
/// edges take the base colour of their class pair; edges inside a class take
/// the smallest colour in 1..k that the base does not use (red for the
/// pentagon). Throws StructureError if the base has a monochromatic triangle or
/// uses all k colours, DimensionError if n < |base|.
ColouredGraph build_gex(int n, int k = 3, const std::optional<ColouredGraph>& base = std::nullopt);

/// Vertex classes of build_gex(n, k, base), in vertex order.
ClassPartition gex_partition(int n, int base_order = 5);

struct GnMembership {
  bool member = false;
  /// False only when the search gave up (orders above 25) without an answer.
  bool complete = true;
  std::optional<ClassPartition> partition;
  /// Cross-class edges carrying the clique colour (the recoloured matchings).
  std::vector<std::pair<int, int>> recoloured;
};

/// Tests membership in G_n: a balanced partition into five cliques of one colour
/// c whose cross pairs follow a triangle-free 2-colouring of the class pentagon,
/// up to matchings recoloured to c, with no monochromatic triangles beyond those
/// inside classes. Throws DimensionError for fewer than 5 vertices.
GnMembership is_member_gn(const ColouredGraph& g);

/// A partition into five nonempty monochromatic cliques of a common colour.
/// Exhaustive up to 25 vertices; beyond that a greedy search that may miss one.
std::optional<ClassPartition> clique_partition_5(const ColouredGraph& g);

/// True if `p` covers g's vertices by five disjoint nonempty cliques of p.colour.
bool is_valid_partition(const ColouredGraph& g, const ClassPartition& p);

struct MonoClique {
  std::vector<int> vertices;
  Colour colour;

  friend bool operator==(const MonoClique&, const MonoClique&) = default;
};

/// Inclusion-maximal monochromatic cliques with at least min_size vertices,
/// sorted by colour then vertex list. Throws SizeLimitError above 40 vertices.
std::vector<MonoClique> maximal_mono_cliques(const ColouredGraph& g, int min_size = 4);

struct BruteMinimum {
  std::uint64_t minimum = 0;
  std::vector<CanonicalKey> minimisers;
  std::vector<ColouredGraph> representatives;
};

/// Exact minimum number of monochromatic triangles over k-colourings of K_n,
/// with every minimiser up to isomorphism. Supported: k = 2 with n <= 7,
/// k = 3 with n <= 6; SizeLimitError otherwise.
BruteMinimum brute_min_mono(int n, int k);

}  // namespace flagcert
