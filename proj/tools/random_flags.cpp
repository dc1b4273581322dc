#include "random_flags.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <utility>

namespace flagcert::tools {

ColouredGraph random_colouring(std::mt19937_64& rng, int n, int k) {
  std::uniform_int_distribution<int> colour(1, k);
  ColouredGraph g(n, k, kRed);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.set_colour(u, v, static_cast<Colour>(colour(rng)));
  }
  return g;
}

Flag random_flag(std::mt19937_64& rng, const TypeSigma& sigma, int order) {
  auto g = random_colouring(rng, order, sigma.graph().num_colours());
  std::vector<int> perm(static_cast<std::size_t>(order));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const int s = sigma.size();
  std::vector<int> theta(perm.begin(), perm.begin() + s);
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      g.set_colour(theta[static_cast<std::size_t>(i)], theta[static_cast<std::size_t>(j)], sigma.graph().colour(i, j));
    }
  }
  return Flag(sigma, std::move(g), std::move(theta));
}

ChainRuleSummary run_chain_rule_trials(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  // Keyed by the labelled type itself: isomorphic types with different labels have different flags.
  std::map<std::tuple<int, std::vector<Colour>, int>, std::vector<Flag>> cache;
  ChainRuleSummary summary;
  for (int t = 0; t < trials; ++t) {
    const int s = std::uniform_int_distribution<int>(0, 3)(rng);
    const TypeSigma sigma(random_colouring(rng, s));
    const int m = std::uniform_int_distribution<int>(std::max(s, 1), 5)(rng);
    const int f_order = std::uniform_int_distribution<int>(s, m)(rng);
    const int h_order = std::uniform_int_distribution<int>(m, 7)(rng);
    const Flag f = random_flag(rng, sigma, f_order);
    const Flag h = random_flag(rng, sigma, h_order);
    auto& flags = cache[{s, sigma.graph().upper_triangle(), m}];
    if (flags.empty()) flags = enumerate_flags(sigma, m);
    ++summary.trials;
    if (verify_chain_rule(f, flags, h)) ++summary.passed;
  }
  return summary;
}

}  // namespace flagcert::tools
