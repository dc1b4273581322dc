#pragma once

// Brute-force reference implementations used to check the library. None of
// these call the canonical labelling or the enumeration code.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "flagcert/coloured_graph.hpp"
#include "flagcert/rational.hpp"

namespace oracle {

using flagcert::ColouredGraph;
using flagcert::Rational;

// True iff some vertex permutation maps a onto b colour for colour.
bool isomorphic(const ColouredGraph& a, const ColouredGraph& b);

// Same, but the permutation must send a_labels[i] to b_labels[i].
bool flag_isomorphic(const ColouredGraph& a, std::span<const int> a_labels, const ColouredGraph& b,
                     std::span<const int> b_labels);

// All r-subsets of {0..n-1}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int r);

// All injective r-tuples into {0..n-1}.
std::vector<std::vector<int>> injections(int n, int r);

Rational density(const ColouredGraph& h, const ColouredGraph& g);

std::uint64_t mono_triangles(const ColouredGraph& g);

// Every labelled k-colouring of K_n, as graphs. Only for tiny n.
std::vector<ColouredGraph> all_colourings(int n, int k);

// Number of isomorphism classes among all labelled colourings (pairwise brute check).
std::size_t count_classes(const std::vector<ColouredGraph>& graphs);

ColouredGraph random_colouring(std::mt19937_64& rng, int n, int k = 3);
ColouredGraph random_relabel(std::mt19937_64& rng, const ColouredGraph& g);

}  // namespace oracle
