#pragma once

#include <span>
#include <vector>

namespace flagcert::detail {

// Calls f(span) for each r-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(int n, int r, F&& f) {
  if (r < 0 || r > n) return;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(std::span<const int>(idx));
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Same, over the elements of `pool`.
template <class F>
void for_each_subset_of(std::span<const int> pool, int r, F&& f) {
  std::vector<int> chosen(static_cast<std::size_t>(r < 0 ? 0 : r));
  for_each_combination(static_cast<int>(pool.size()), r, [&](std::span<const int> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) chosen[i] = pool[static_cast<std::size_t>(idx[i])];
    f(std::span<const int>(chosen));
  });
}

}  // namespace flagcert::detail
