#include "flagcert/flags.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "combinations.hpp"
#include "flagcert/enumerate.hpp"
#include "flagcert/error.hpp"

namespace flagcert {
namespace {

std::vector<int> iota_vector(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

bool respects_type(const ColouredGraph& type, const ColouredGraph& g, std::span<const int> theta) {
  for (int i = 0; i < type.order(); ++i) {
    for (int j = i + 1; j < type.order(); ++j) {
      if (g.colour(theta[static_cast<std::size_t>(i)], theta[static_cast<std::size_t>(j)]) != type.colour(i, j)) {
        return false;
      }
    }
  }
  return true;
}

// Calls f(theta) for every colour-respecting injection of the type into g.
template <class F>
void for_each_type_injection(const ColouredGraph& type, const ColouredGraph& g, F&& f) {
  const int s = type.order();
  const int n = g.order();
  std::vector<int> theta;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void()> rec = [&] {
    const int d = static_cast<int>(theta.size());
    if (d == s) {
      f(std::span<const int>(theta));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) ok = g.colour(theta[static_cast<std::size_t>(i)], v) == type.colour(i, d);
      if (!ok) continue;
      used[static_cast<std::size_t>(v)] = 1;
      theta.push_back(v);
      rec();
      theta.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
  };
  rec();
}

BigInt falling_factorial(long n, long k) {
  BigInt out = 1;
  for (long i = 0; i < k; ++i) out *= n - i;
  return out;
}

// Key of the flag induced on theta followed by `extra`, labels at the front.
FlagKey induced_flag_key(const ColouredGraph& g, std::span<const int> theta, std::span<const int> extra) {
  std::vector<int> verts(theta.begin(), theta.end());
  verts.insert(verts.end(), extra.begin(), extra.end());
  const auto fixed = iota_vector(static_cast<int>(theta.size()));
  return canonical_form_fixing(g.induced(verts), fixed).key;
}

std::vector<int> complement_of(int n, std::span<const int> taken) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (int v : taken) in[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (!in[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

void require_same_type(const Flag& a, const Flag& b) {
  if (!(a.type() == b.type())) throw DimensionError("flags are over different types");
}

ColouredGraph type_matrix(int c12, int c13, int c23) {
  return ColouredGraph::from_matrix({{0, c12, c13}, {c12, 0, c23}, {c13, c23, 0}});
}

}  // namespace

Flag::Flag(TypeSigma type, ColouredGraph model, std::vector<int> theta)
    : type_(std::move(type)), model_(std::move(model)), theta_(std::move(theta)) {
  const int s = type_.size();
  if (static_cast<int>(theta_.size()) != s) {
    throw StructureError("theta has " + std::to_string(theta_.size()) + " images for a type of size " +
                         std::to_string(s));
  }
  std::vector<char> seen(static_cast<std::size_t>(model_.order()), 0);
  for (int v : theta_) {
    if (v < 0 || v >= model_.order()) throw StructureError("theta image " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) throw StructureError("theta is not injective");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  if (!respects_type(type_.graph(), model_, theta_)) {
    throw StructureError("theta does not respect the edge colours of the type");
  }
  key_ = canonical_form_fixing(model_, theta_).key;
}

std::vector<TypeSigma> ten_types() {
  // Colours of edges 12, 13, 23.
  static constexpr int kEdges[10][3] = {{1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 2, 3},
                                        {1, 3, 3}, {2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {3, 3, 3}};
  std::vector<TypeSigma> out;
  for (const auto& e : kEdges) out.emplace_back(type_matrix(e[0], e[1], e[2]));
  return out;
}

std::vector<Flag> enumerate_flags(const TypeSigma& sigma, int order) {
  const int s = sigma.size();
  const int k = sigma.graph().num_colours();
  if (order < s) throw DimensionError("flag order below type size");
  if (s == 0) {
    std::vector<Flag> out;
    for (auto& m : enumerate_models(order, k)) out.emplace_back(sigma, std::move(m), std::vector<int>{});
    return out;
  }
  std::vector<std::pair<int, int>> free_pairs;
  for (int u = 0; u < order; ++u) {
    for (int v = std::max(u + 1, s); v < order; ++v) free_pairs.emplace_back(u, v);
  }
  if (free_pairs.size() > 10) {
    throw SizeLimitError("flag enumeration with " + std::to_string(free_pairs.size()) +
                         " free edges is beyond the supported range (max 10)");
  }
  ColouredGraph g(order, k, kRed);
  for (int u = 0; u < s; ++u) {
    for (int v = u + 1; v < s; ++v) g.set_colour(u, v, sigma.graph().colour(u, v));
  }
  const auto labels = iota_vector(s);
  std::map<FlagKey, ColouredGraph> found;
  std::vector<Colour> x(free_pairs.size(), 1);
  while (true) {
    for (std::size_t i = 0; i < x.size(); ++i) g.set_colour(free_pairs[i].first, free_pairs[i].second, x[i]);
    auto form = canonical_form_fixing(g, labels);
    if (!found.contains(form.key)) found.emplace(form.key, g.relabelled(form.perm));
    std::size_t i = x.size();
    while (i > 0 && x[i - 1] == k) x[--i] = 1;
    if (i == 0) break;
    ++x[i - 1];
  }
  std::vector<Flag> out;
  out.reserve(found.size());
  for (auto& [key, model] : found) out.emplace_back(sigma, std::move(model), labels);
  return out;
}

Flag flag_from_vector(const TypeSigma& sigma, const ColourVector& v) {
  if (sigma.size() != 3) throw StructureError("vector flags need a 3-vertex type");
  const int k = sigma.graph().num_colours();
  ColouredGraph g(4, k, kRed);
  for (int u = 0; u < 3; ++u) {
    for (int w = u + 1; w < 3; ++w) g.set_colour(u, w, sigma.graph().colour(u, w));
  }
  for (int u = 0; u < 3; ++u) {
    const int c = v[static_cast<std::size_t>(u)];
    if (c < 1 || c > k) {
      throw StructureError("flag colour " + std::to_string(c) + " outside 1.." + std::to_string(k));
    }
    g.set_colour(u, 3, static_cast<Colour>(c));
  }
  return Flag(sigma, std::move(g), {0, 1, 2});
}

ColourVector flag_vector(const Flag& f) {
  if (f.type().size() != 3 || f.order() != 4) throw DimensionError("colour vectors need a 4-vertex flag over a 3-vertex type");
  const auto rest = complement_of(4, f.theta());
  ColourVector v{};
  for (std::size_t i = 0; i < 3; ++i) v[i] = f.model().colour(rest.front(), f.theta()[i]);
  return v;
}

Flag identity_flag(const TypeSigma& sigma) { return Flag(sigma, sigma.graph(), iota_vector(sigma.size())); }

Rational flag_density(const Flag& f, const Flag& g) {
  require_same_type(f, g);
  if (g.order() < f.order()) return Rational(0);
  const int s = f.type().size();
  const auto rest = complement_of(g.order(), g.theta());
  const int extra = f.order() - s;
  std::uint64_t hits = 0;
  detail::for_each_subset_of(rest, extra, [&](std::span<const int> x) {
    if (induced_flag_key(g.model(), g.theta(), x) == f.key()) ++hits;
  });
  return Rational(BigInt(static_cast<unsigned long>(hits)), binomial(static_cast<long>(rest.size()), extra));
}

Rational joint_density(const Flag& f1, const Flag& f2, const Flag& g) {
  require_same_type(f1, f2);
  require_same_type(f1, g);
  const int s = g.type().size();
  const int a = f1.order() - s;
  const int b = f2.order() - s;
  if (g.order() < s + a + b) {
    throw DimensionError("joint density needs |G| >= |F1| + |F2| - |sigma|");
  }
  const auto rest = complement_of(g.order(), g.theta());
  std::uint64_t hits = 0;
  detail::for_each_subset_of(rest, a, [&](std::span<const int> x) {
    if (induced_flag_key(g.model(), g.theta(), x) != f1.key()) return;
    std::vector<int> taken(g.theta().begin(), g.theta().end());
    taken.insert(taken.end(), x.begin(), x.end());
    const auto remaining = complement_of(g.order(), taken);
    detail::for_each_subset_of(remaining, b, [&](std::span<const int> y) {
      if (induced_flag_key(g.model(), g.theta(), y) == f2.key()) ++hits;
    });
  });
  const long n = static_cast<long>(rest.size());
  return Rational(BigInt(static_cast<unsigned long>(hits)), binomial(n, a) * binomial(n - a, b));
}

Rational avg_coefficient(const TypeSigma& tau, const Flag& k1, const Flag& k2, const ColouredGraph& l) {
  if (!(k1.type() == tau) || !(k2.type() == tau)) throw DimensionError("flags are not over the given type");
  const int s = tau.size();
  const int a = k1.order() - s;
  const int b = k2.order() - s;
  if (l.order() != s + a + b) {
    throw DimensionError("avg_coefficient needs |L| = |K1| + |K2| - |tau|, got |L| = " + std::to_string(l.order()));
  }
  const bool vector_route = s == 3 && a == 1 && b == 1;
  ColourVector v1{}, v2{};
  if (vector_route) {
    v1 = flag_vector(k1);
    v2 = flag_vector(k2);
  }
  std::uint64_t hits = 0;
  for_each_type_injection(tau.graph(), l, [&](std::span<const int> theta) {
    const auto rest = complement_of(l.order(), theta);
    if (vector_route) {
      const auto vec = [&](int x) {
        return ColourVector{l.colour(x, theta[0]), l.colour(x, theta[1]), l.colour(x, theta[2])};
      };
      const auto c0 = vec(rest[0]);
      const auto c1 = vec(rest[1]);
      if (c0 == v1 && c1 == v2) ++hits;
      if (c1 == v1 && c0 == v2) ++hits;
      return;
    }
    detail::for_each_subset_of(rest, a, [&](std::span<const int> x) {
      if (induced_flag_key(l, theta, x) != k1.key()) return;
      const auto y = complement_of(l.order(), [&] {
        std::vector<int> t(theta.begin(), theta.end());
        t.insert(t.end(), x.begin(), x.end());
        return t;
      }());
      if (induced_flag_key(l, theta, y) == k2.key()) ++hits;
    });
  });
  const BigInt total = falling_factorial(l.order(), s) * binomial(l.order() - s, a);
  return Rational(BigInt(static_cast<unsigned long>(hits)), total);
}

std::vector<std::vector<Rational>> avg_coefficient_matrix(const TypeSigma& tau, const std::vector<Flag>& flags,
                                                          const ColouredGraph& l) {
  const std::size_t n = flags.size();
  if (n == 0) return {};
  const int s = tau.size();
  const int a = flags.front().order() - s;
  for (const auto& f : flags) {
    if (!(f.type() == tau)) throw DimensionError("flags are not over the given type");
    if (f.order() != flags.front().order()) throw DimensionError("flags differ in order");
  }
  if (l.order() != s + 2 * a) throw DimensionError("avg_coefficient_matrix needs |L| = 2|K| - |tau|");
  std::map<FlagKey, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(flags[i].key(), i);

  std::vector<std::vector<std::uint64_t>> hits(n, std::vector<std::uint64_t>(n, 0));
  for_each_type_injection(tau.graph(), l, [&](std::span<const int> theta) {
    const auto rest = complement_of(l.order(), theta);
    detail::for_each_subset_of(rest, a, [&](std::span<const int> x) {
      std::vector<int> t(theta.begin(), theta.end());
      t.insert(t.end(), x.begin(), x.end());
      const auto y = complement_of(l.order(), t);
      const auto ix = index.find(induced_flag_key(l, theta, x));
      const auto iy = index.find(induced_flag_key(l, theta, y));
      if (ix != index.end() && iy != index.end()) ++hits[ix->second][iy->second];
    });
  });
  const BigInt total = falling_factorial(l.order(), s) * binomial(l.order() - s, a);
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = Rational(BigInt(static_cast<unsigned long>(hits[i][j])), total);
  }
  return out;
}

Rational unlabel_coefficient(const Flag& f) {
  const int s = f.type().size();
  std::uint64_t hits = 0;
  for_each_type_injection(f.type().graph(), f.model(), [&](std::span<const int> theta) {
    if (canonical_form_fixing(f.model(), theta).key == f.key()) ++hits;
  });
  return Rational(BigInt(static_cast<unsigned long>(hits)), falling_factorial(f.order(), s));
}

std::uint64_t count_type_injections(const TypeSigma& tau, const ColouredGraph& l) {
  std::uint64_t count = 0;
  for_each_type_injection(tau.graph(), l, [&](std::span<const int>) { ++count; });
  return count;
}

bool verify_chain_rule(const Flag& f, int m, const Flag& h) {
  if (f.order() > m || m > h.order()) throw DimensionError("chain rule needs |F| <= m <= |H|");
  return verify_chain_rule(f, enumerate_flags(f.type(), m), h);
}

bool verify_chain_rule(const Flag& f, const std::vector<Flag>& order_m_flags, const Flag& h) {
  require_same_type(f, h);
  if (order_m_flags.empty()) throw DimensionError("empty flag list");
  const int m = order_m_flags.front().order();
  if (f.order() > m || m > h.order()) throw DimensionError("chain rule needs |F| <= m <= |H|");
  const int s = f.type().size();

  // Profile of H: how often each order-m flag is induced.
  const auto rest = complement_of(h.order(), h.theta());
  std::map<FlagKey, std::uint64_t> profile;
  detail::for_each_subset_of(rest, m - s, [&](std::span<const int> x) {
    ++profile[induced_flag_key(h.model(), h.theta(), x)];
  });
  const BigInt total = binomial(static_cast<long>(rest.size()), m - s);

  Rational rhs(0);
  std::uint64_t covered = 0;
  for (const auto& g : order_m_flags) {
    require_same_type(f, g);
    if (g.order() != m) throw DimensionError("flag list mixes orders");
    const auto it = profile.find(g.key());
    if (it == profile.end()) continue;
    covered += it->second;
    rhs += flag_density(f, g) * Rational(BigInt(static_cast<unsigned long>(it->second)), total);
  }
  // An incomplete flag list cannot satisfy the identity in general.
  if (BigInt(static_cast<unsigned long>(covered)) != total) return false;
  return flag_density(f, h) == rhs;
}

}  // namespace flagcert
