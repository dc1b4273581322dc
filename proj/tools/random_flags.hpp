#pragma once

#include <cstdint>
#include <random>

#include "flagcert/flags.hpp"

namespace flagcert::tools {

/// Uniform random k-colouring of K_n.
ColouredGraph random_colouring(std::mt19937_64& rng, int n, int k = 3);

/// Random flag of the given order over sigma, with the labels placed on random vertices.
Flag random_flag(std::mt19937_64& rng, const TypeSigma& sigma, int order);

struct ChainRuleSummary {
  int trials = 0;
  int passed = 0;
};

/// Draws `trials` triples (F, m, H) with |H| <= 7 and types of size 0..3 and
/// checks the chain rule on each.
ChainRuleSummary run_chain_rule_trials(std::uint64_t seed, int trials);

}  // namespace flagcert::tools
