#include "flagcert/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "flagcert/error.hpp"

namespace flagcert {
namespace {

// Exact search for the lexicographically least row-major upper-triangle listing.
//
// Row d of the listing is the colours from the vertex placed at position d to
// all later positions. Since row d outranks every later row, the vertices after
// position d must be ordered by their colour signatures to positions 0..d, and
// the next vertex must come from the first cell of that ordered partition. The
// search branches only over first-cell members and prunes against the best
// listing found so far.
class Searcher {
 public:
  Searcher(const ColouredGraph& g, std::span<const int> fixed, bool collect_ties)
      : g_(g), n_(g.order()), fixed_(fixed.begin(), fixed.end()), collect_ties_(collect_ties) {
    less_.assign(static_cast<std::size_t>(n_) + 1, 0);
    less_[0] = 1;  // no best yet: anything is an improvement
  }

  void run() {
    std::vector<char> is_fixed(static_cast<std::size_t>(n_), 0);
    for (int v : fixed_) is_fixed[static_cast<std::size_t>(v)] = 1;
    std::vector<int> free;
    for (int v = 0; v < n_; ++v) {
      if (!is_fixed[static_cast<std::size_t>(v)]) free.push_back(v);
    }
    std::vector<std::vector<int>> cells;
    if (!free.empty()) cells.push_back(std::move(free));
    perm_.clear();
    current_.clear();
    dfs(0, cells);
  }

  const std::vector<std::uint8_t>& best() const { return best_; }
  const std::vector<int>& best_perm() const { return best_perm_; }
  const std::vector<std::vector<int>>& ties() const { return ties_; }

 private:
  std::size_t offset(int d) const {
    return static_cast<std::size_t>(d * (n_ - 1) - d * (d - 1) / 2);
  }

  void dfs(int d, const std::vector<std::vector<int>>& cells) {
    if (d == n_) {
      leaf();
      return;
    }
    const int s = static_cast<int>(fixed_.size());
    std::vector<int> candidates;
    if (d < s) {
      candidates.push_back(fixed_[static_cast<std::size_t>(d)]);
    } else {
      candidates = cells.front();
    }

    const std::size_t off = offset(d);
    const std::size_t row_len = static_cast<std::size_t>(n_ - 1 - d);
    std::vector<std::uint8_t> row;
    std::vector<std::vector<int>> refined;
    for (int v : candidates) {
      row.clear();
      refined.clear();
      for (int j = d + 1; j < s; ++j) row.push_back(g_.colour(v, fixed_[static_cast<std::size_t>(j)]));
      for (const auto& cell : cells) {
        // Split the cell by colour to v; ascending colour order keeps the row minimal.
        std::vector<std::pair<Colour, int>> tagged;
        tagged.reserve(cell.size());
        for (int u : cell) {
          if (u != v) tagged.emplace_back(g_.colour(v, u), u);
        }
        std::stable_sort(tagged.begin(), tagged.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < tagged.size(); ++i) {
          row.push_back(tagged[i].first);
          if (i == 0 || tagged[i].first != tagged[i - 1].first) refined.emplace_back();
          refined.back().push_back(tagged[i].second);
        }
      }

      char child_less = less_[static_cast<std::size_t>(d)];
      if (!child_less) {
        const int c = compare_segment(row, off, row_len);
        if (c > 0) continue;
        child_less = c < 0 ? 1 : 0;
      }
      less_[static_cast<std::size_t>(d) + 1] = child_less;
      current_.resize(off);
      current_.insert(current_.end(), row.begin(), row.end());
      perm_.push_back(v);
      const std::vector<std::vector<int>> next = refined;
      dfs(d + 1, next);
      perm_.pop_back();
    }
  }

  int compare_segment(const std::vector<std::uint8_t>& row, std::size_t off, std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (row[i] != best_[off + i]) return row[i] < best_[off + i] ? -1 : 1;
    }
    return 0;
  }

  void leaf() {
    if (less_[static_cast<std::size_t>(n_)]) {
      best_ = current_;
      best_perm_ = perm_;
      ties_.clear();
      if (collect_ties_) ties_.push_back(perm_);
      // The path to this leaf now is the best prefix at every depth.
      std::fill(less_.begin(), less_.end(), 0);
    } else if (collect_ties_) {
      ties_.push_back(perm_);
    }
  }

  const ColouredGraph& g_;
  int n_;
  std::vector<int> fixed_;
  bool collect_ties_;
  std::vector<char> less_;  // less_[d]: rows 0..d-1 of the current path beat best_
  std::vector<int> perm_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> ties_;
};

void check_order(const ColouredGraph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw SizeLimitError("canonical labelling supports at most " + std::to_string(kMaxCanonicalOrder) +
                         " vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (auto b : bytes_) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw std::invalid_argument("odd-length hex key");
  std::vector<std::uint8_t> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    bytes.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
  }
  return CanonicalKey(std::move(bytes));
}

CanonicalForm canonical_form(const ColouredGraph& g) {
  check_order(g);
  Searcher search(g, {}, false);
  search.run();
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(g.order())};
  bytes.insert(bytes.end(), search.best().begin(), search.best().end());
  return CanonicalForm{CanonicalKey(std::move(bytes)), search.best_perm()};
}

CanonicalKey canonical_key(const ColouredGraph& g) { return canonical_form(g).key; }

bool is_isomorphic(const ColouredGraph& a, const ColouredGraph& b) {
  return a.order() == b.order() && canonical_key(a) == canonical_key(b);
}

std::vector<std::vector<int>> automorphisms(const ColouredGraph& g) {
  check_order(g);
  Searcher search(g, {}, true);
  search.run();
  const auto& ties = search.ties();
  const auto& p = ties.front();
  const std::size_t n = p.size();
  std::vector<std::vector<int>> out;
  out.reserve(ties.size());
  // Both p and q relabel g to the same graph, so q_i -> p_i is an automorphism.
  for (const auto& q : ties) {
    std::vector<int> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[static_cast<std::size_t>(q[i])] = p[i];
    out.push_back(std::move(sigma));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalForm canonical_form_fixing(const ColouredGraph& g, std::span<const int> fixed) {
  check_order(g);
  Searcher search(g, fixed, false);
  search.run();
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(g.order()), static_cast<std::uint8_t>(fixed.size())};
  bytes.insert(bytes.end(), search.best().begin(), search.best().end());
  return CanonicalForm{CanonicalKey(std::move(bytes)), search.best_perm()};
}

}  // namespace flagcert
