#include "flagcert/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

#include "flagcert/density.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/error.hpp"
#include "flagcert/formulas.hpp"

namespace flagcert {
namespace {

constexpr int kClasses = 5;
constexpr int kExactLimit = 25;
constexpr long kNodeBudget = 5'000'000;

using Bits = std::uint64_t;

// Proper colouring of the "conflict" graph (pairs not coloured c) with at most
// five colours, i.e. a cover by at most five c-cliques. DSATUR order; exact
// when `exact`, otherwise a single greedy pass.
std::optional<std::vector<int>> colour_conflicts(const ColouredGraph& g, Colour c, bool exact) {
  const int n = g.order();
  std::vector<std::vector<char>> conflict(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.colour(u, v) != c) {
        conflict[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        ++degree[static_cast<std::size_t>(u)];
      }
    }
  }
  std::vector<int> colour(static_cast<std::size_t>(n), -1);

  auto forbidden = [&](int v) {
    unsigned mask = 0;
    for (int u = 0; u < n; ++u) {
      if (colour[static_cast<std::size_t>(u)] >= 0 && conflict[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) {
        mask |= 1u << colour[static_cast<std::size_t>(u)];
      }
    }
    return mask;
  };
  auto pick = [&] {
    int best = -1;
    int best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[static_cast<std::size_t>(v)] >= 0) continue;
      const int sat = std::popcount(forbidden(v));
      if (sat > best_sat || (sat == best_sat && degree[static_cast<std::size_t>(v)] > degree[static_cast<std::size_t>(best)])) {
        best = v;
        best_sat = sat;
      }
    }
    return best;
  };

  std::function<bool(int, int)> rec = [&](int coloured, int used) {
    if (coloured == n) return true;
    const int v = pick();
    const unsigned mask = forbidden(v);
    const int limit = std::min(used + 1, kClasses);
    for (int col = 0; col < limit; ++col) {
      if (mask & (1u << col)) continue;
      colour[static_cast<std::size_t>(v)] = col;
      if (rec(coloured + 1, std::max(used, col + 1))) return true;
      if (!exact) break;
    }
    colour[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (!rec(0, 0)) return std::nullopt;
  return colour;
}

Bits bit(int v) { return Bits{1} << v; }

void bron_kerbosch(const std::vector<Bits>& adj, Bits r, Bits p, Bits x, int min_size, std::vector<Bits>& out) {
  if (p == 0 && x == 0) {
    if (std::popcount(r) >= min_size) out.push_back(r);
    return;
  }
  if (std::popcount(r) + std::popcount(p) < min_size) return;
  const Bits px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (Bits t = px; t; t &= t - 1) {
    const int u = std::countr_zero(t);
    const int cnt = std::popcount(p & adj[static_cast<std::size_t>(u)]);
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  for (Bits t = p & ~adj[static_cast<std::size_t>(pivot)]; t; t &= t - 1) {
    const int v = std::countr_zero(t);
    bron_kerbosch(adj, r | bit(v), p & adj[static_cast<std::size_t>(v)], x & adj[static_cast<std::size_t>(v)], min_size, out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

// Backtracking search for a G_n witness with clique colour c.
class GnSearch {
 public:
  GnSearch(const ColouredGraph& g, Colour c, bool budgeted)
      : g_(g), c_(c), n_(g.order()), lo_(n_ / kClasses), hi_((n_ + kClasses - 1) / kClasses), budgeted_(budgeted) {
    for (int col = 1; col <= g.num_colours(); ++col) {
      if (col != c) base_colours_.push_back(static_cast<Colour>(col));
    }
    members_.resize(kClasses);
    partner_.assign(static_cast<std::size_t>(n_), std::array<int, kClasses>{});
    for (auto& row : beta_) row.fill(0);
  }

  bool run() { return assign(0); }
  bool aborted() const { return aborted_; }
  const std::vector<std::vector<int>>& classes() const { return result_; }

 private:
  bool assign(int v) {
    if (budgeted_ && ++nodes_ > kNodeBudget) {
      aborted_ = true;
      return false;
    }
    if (v == n_) return finish();
    int first_empty = kClasses;
    for (int j = 0; j < kClasses; ++j) {
      if (members_[static_cast<std::size_t>(j)].empty()) {
        first_empty = j;
        break;
      }
    }
    const int top = std::min(first_empty, kClasses - 1);
    for (int j = 0; j <= top; ++j) {
      if (try_place(v, j)) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool try_place(int v, int j) {
    auto& cls = members_[static_cast<std::size_t>(j)];
    if (static_cast<int>(cls.size()) >= hi_) return false;
    for (int u : cls) {
      if (g_.colour(u, v) != c_) return false;
    }
    // Balance: every class must still be able to reach the lower size.
    int deficit = 0;
    for (int i = 0; i < kClasses; ++i) {
      const int size = static_cast<int>(members_[static_cast<std::size_t>(i)].size()) + (i == j ? 1 : 0);
      deficit += std::max(0, lo_ - size);
    }
    if (deficit > n_ - v - 1) return false;

    const auto saved_beta = beta_;
    std::vector<std::pair<int, int>> bumped;  // (vertex, class) partner increments
    bool ok = true;
    for (int i = 0; i < kClasses && ok; ++i) {
      if (i == j) continue;
      for (int u : members_[static_cast<std::size_t>(i)]) {
        const Colour col = g_.colour(u, v);
        if (col == c_) {
          if (partner_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] > 0 ||
              partner_[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)] > 0) {
            ok = false;
            break;
          }
          ++partner_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
          ++partner_[static_cast<std::size_t>(u)][static_cast<std::size_t>(j)];
          bumped.emplace_back(v, i);
          bumped.emplace_back(u, j);
        } else {
          int& b = beta_[static_cast<std::size_t>(std::min(i, j))][static_cast<std::size_t>(std::max(i, j))];
          if (b != 0 && b != col) {
            ok = false;
            break;
          }
          b = col;
        }
      }
    }
    if (ok) {
      cls.push_back(v);
      if (assign(v + 1)) return true;
      cls.pop_back();
    }
    for (const auto& [x, i] : bumped) --partner_[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)];
    beta_ = saved_beta;
    return false;
  }

  // Fill undetermined class pairs so that the quotient has no monochromatic triangle.
  bool finish() {
    if (base_colours_.size() != 2) return false;
    std::vector<std::pair<int, int>> open;
    for (int i = 0; i < kClasses; ++i) {
      for (int j = i + 1; j < kClasses; ++j) {
        if (beta_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) open.emplace_back(i, j);
      }
    }
    auto quotient = beta_;
    for (unsigned mask = 0; mask < (1u << open.size()); ++mask) {
      for (std::size_t t = 0; t < open.size(); ++t) {
        quotient[static_cast<std::size_t>(open[t].first)][static_cast<std::size_t>(open[t].second)] =
            base_colours_[(mask >> t) & 1u];
      }
      if (triangle_free(quotient)) {
        result_ = members_;
        return true;
      }
    }
    return false;
  }

  static bool triangle_free(const std::array<std::array<int, kClasses>, kClasses>& q) {
    for (int a = 0; a < kClasses; ++a) {
      for (int b = a + 1; b < kClasses; ++b) {
        for (int d = b + 1; d < kClasses; ++d) {
          if (q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == q[static_cast<std::size_t>(a)][static_cast<std::size_t>(d)] &&
              q[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == q[static_cast<std::size_t>(b)][static_cast<std::size_t>(d)]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  const ColouredGraph& g_;
  Colour c_;
  int n_;
  int lo_;
  int hi_;
  bool budgeted_;
  long nodes_ = 0;
  bool aborted_ = false;
  std::vector<Colour> base_colours_;
  std::vector<std::vector<int>> members_;
  std::vector<std::array<int, kClasses>> partner_;
  std::array<std::array<int, kClasses>, kClasses> beta_{};
  std::vector<std::vector<int>> result_;
};

}  // namespace

ColouredGraph pentagon_base() {
  ColouredGraph g(5, 3, kBlue);
  for (int i = 0; i < 5; ++i) g.set_colour(i, (i + 1) % 5, kGreen);
  return g;
}

ClassPartition gex_partition(int n, int base_order) {
  if (base_order < 1 || n < base_order) throw DimensionError("need n >= base order");
  ClassPartition p;
  const int q = n / base_order;
  const int r = n % base_order;
  int v = 0;
  for (int i = 0; i < base_order; ++i) {
    p.classes.emplace_back();
    for (int t = 0; t < q + (i < r ? 1 : 0); ++t) p.classes.back().push_back(v++);
  }
  return p;
}

ColouredGraph build_gex(int n, int k, const std::optional<ColouredGraph>& base_opt) {
  const ColouredGraph base = base_opt ? *base_opt : pentagon_base();
  const int m = base.order();
  if (n < m) {
    throw DimensionError("G_ex needs n >= " + std::to_string(m) + ", got " + std::to_string(n));
  }
  if (mono_triangles(base).total != 0) throw StructureError("base colouring has a monochromatic triangle");
  std::vector<char> used(256, 0);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      if (base.colour(u, v) > k) throw StructureError("base uses colours beyond 1.." + std::to_string(k));
      used[base.colour(u, v)] = 1;
    }
  }
  int clique = 0;
  for (int c = 1; c <= k && clique == 0; ++c) {
    if (!used[static_cast<std::size_t>(c)]) clique = c;
  }
  if (clique == 0) throw StructureError("base uses all " + std::to_string(k) + " colours, none left for the classes");

  auto partition = gex_partition(n, m);
  std::vector<int> class_of(static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i) {
    for (int v : partition.classes[static_cast<std::size_t>(i)]) class_of[static_cast<std::size_t>(v)] = i;
  }
  ColouredGraph g(n, k, static_cast<Colour>(clique));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int a = class_of[static_cast<std::size_t>(u)];
      const int b = class_of[static_cast<std::size_t>(v)];
      if (a != b) g.set_colour(u, v, base.colour(a, b));
    }
  }
  return g;
}

GnMembership is_member_gn(const ColouredGraph& g) {
  const int n = g.order();
  if (n < kClasses) throw DimensionError("G_n membership needs at least 5 vertices, got " + std::to_string(n));
  GnMembership out;
  if (g.num_colours() != 3) return out;
  const auto triangles = mono_triangles(g);
  if (triangles.total != static_cast<std::uint64_t>(corollary_value(n))) return out;

  for (int c = 1; c <= g.num_colours(); ++c) {
    if (triangles.by_colour[static_cast<std::size_t>(c - 1)] != triangles.total) continue;
    GnSearch search(g, static_cast<Colour>(c), n > kExactLimit);
    if (search.run()) {
      out.member = true;
      out.complete = true;
      out.partition = ClassPartition{search.classes(), static_cast<Colour>(c)};
      std::vector<int> class_of(static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < search.classes().size(); ++i) {
        for (int v : search.classes()[i]) class_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (class_of[static_cast<std::size_t>(u)] != class_of[static_cast<std::size_t>(v)] && g.colour(u, v) == c) {
            out.recoloured.emplace_back(u, v);
          }
        }
      }
      return out;
    }
    if (search.aborted()) out.complete = false;
  }
  return out;
}

bool is_valid_partition(const ColouredGraph& g, const ClassPartition& p) {
  if (p.classes.size() != static_cast<std::size_t>(kClasses)) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::size_t covered = 0;
  for (const auto& cls : p.classes) {
    if (cls.empty()) return false;
    for (std::size_t a = 0; a < cls.size(); ++a) {
      const int v = cls[a];
      if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (g.colour(v, cls[b]) != p.colour) return false;
      }
    }
  }
  return covered == static_cast<std::size_t>(g.order());
}

std::optional<ClassPartition> clique_partition_5(const ColouredGraph& g) {
  const int n = g.order();
  if (n < kClasses) return std::nullopt;
  for (int c = 1; c <= g.num_colours(); ++c) {
    const auto colouring = colour_conflicts(g, static_cast<Colour>(c), n <= kExactLimit);
    if (!colouring) continue;
    ClassPartition p;
    p.colour = static_cast<Colour>(c);
    p.classes.resize(kClasses);
    for (int v = 0; v < n; ++v) p.classes[static_cast<std::size_t>((*colouring)[static_cast<std::size_t>(v)])].push_back(v);
    // Fewer than five cliques: split the largest; any part of a clique is a clique.
    std::stable_sort(p.classes.begin(), p.classes.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    while (p.classes.back().empty()) {
      auto& largest = *std::max_element(p.classes.begin(), p.classes.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
      p.classes.back().push_back(largest.back());
      largest.pop_back();
      std::stable_sort(p.classes.begin(), p.classes.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
    }
    for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
    if (is_valid_partition(g, p)) return p;
  }
  return std::nullopt;
}

std::vector<MonoClique> maximal_mono_cliques(const ColouredGraph& g, int min_size) {
  const int n = g.order();
  if (n > 40) throw SizeLimitError("maximal_mono_cliques supports at most 40 vertices, got " + std::to_string(n));
  std::vector<MonoClique> out;
  for (int c = 1; c <= g.num_colours(); ++c) {
    std::vector<Bits> adj(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && g.colour(u, v) == c) adj[static_cast<std::size_t>(u)] |= bit(v);
      }
    }
    std::vector<Bits> found;
    const Bits all = n == 64 ? ~Bits{0} : bit(n) - 1;
    bron_kerbosch(adj, 0, all, 0, std::max(min_size, 1), found);
    std::vector<MonoClique> local;
    for (Bits b : found) {
      MonoClique q{{}, static_cast<Colour>(c)};
      for (Bits t = b; t; t &= t - 1) q.vertices.push_back(std::countr_zero(t));
      local.push_back(std::move(q));
    }
    std::sort(local.begin(), local.end(), [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

BruteMinimum brute_min_mono(int n, int k) {
  const bool supported = (k == 2 && n <= 7) || (k == 3 && n <= 6);
  if (!supported || n < 0) {
    throw SizeLimitError("brute_min_mono supports k=2 with n<=7 and k=3 with n<=6, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  }
  BruteMinimum out;
  bool first = true;
  for (auto& m : enumerate_models(n, k)) {
    const auto total = mono_triangles(m).total;
    if (first || total < out.minimum) {
      out = BruteMinimum{total, {}, {}};
      first = false;
    }
    if (total == out.minimum) {
      out.minimisers.push_back(canonical_key(m));
      out.representatives.push_back(std::move(m));
    }
  }
  return out;
}

}  // namespace flagcert
