#pragma once

#include <vector>

#include "flagcert/coloured_graph.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

/// One representative per isomorphism class of k-edge-coloured K_l, each in its
/// canonical labelling, sorted by CanonicalKey. Built by vertex extension from
/// the order l-1 classes, skipping extensions equivalent under automorphisms.
///
/// Supported sizes: k = 1 any l <= 10; k = 2 l <= 8; k = 3 l <= 6; k >= 4 l <= 5.
/// Throws SizeLimitError otherwise.
std::vector<ColouredGraph> enumerate_models(int order, int num_colours);

/// Number of k-edge-colourings of K_l up to isomorphism, by Burnside's lemma over
/// the cycle types of the symmetric group acting on vertex pairs.
BigInt count_models_polya(int order, int num_colours);

}  // namespace flagcert
