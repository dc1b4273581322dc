#include "flagcert/enumerate.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "flagcert/canonical.hpp"
#include "flagcert/error.hpp"

namespace flagcert {
namespace {

int max_order(int num_colours) {
  switch (num_colours) {
    case 1: return 10;
    case 2: return 8;
    case 3: return 6;
    default: return 5;
  }
}

// True when no automorphism maps the attachment vector x to a smaller one.
bool is_orbit_minimal(const std::vector<Colour>& x, const std::vector<std::vector<int>>& autos) {
  std::vector<Colour> image(x.size());
  for (const auto& sigma : autos) {
    for (std::size_t i = 0; i < x.size(); ++i) image[static_cast<std::size_t>(sigma[i])] = x[i];
    if (image < x) return false;
  }
  return true;
}

}  // namespace

std::vector<ColouredGraph> enumerate_models(int order, int num_colours) {
  if (num_colours < 1) throw DimensionError("need at least one colour");
  if (order < 0) throw DimensionError("negative order");
  if (order > max_order(num_colours)) {
    throw SizeLimitError("enumeration of " + std::to_string(num_colours) + "-coloured K_" +
                         std::to_string(order) + " is beyond the supported range (max order " +
                         std::to_string(max_order(num_colours)) + ")");
  }
  if (order <= 1 || num_colours == 1) return {ColouredGraph(order, num_colours, kRed)};

  std::vector<ColouredGraph> level{ColouredGraph(1, num_colours, kRed)};
  for (int l = 2; l <= order; ++l) {
    std::map<CanonicalKey, ColouredGraph> found;
    const int m = l - 1;
    for (const auto& base : level) {
      const auto autos = automorphisms(base);
      ColouredGraph g(l, num_colours, kRed);
      for (int u = 0; u < m; ++u) {
        for (int v = u + 1; v < m; ++v) g.set_colour(u, v, base.colour(u, v));
      }
      std::vector<Colour> x(static_cast<std::size_t>(m), 1);
      while (true) {
        if (is_orbit_minimal(x, autos)) {
          for (int u = 0; u < m; ++u) g.set_colour(u, m, x[static_cast<std::size_t>(u)]);
          auto form = canonical_form(g);
          if (!found.contains(form.key)) found.emplace(form.key, g.relabelled(form.perm));
        }
        int i = m - 1;
        while (i >= 0 && x[static_cast<std::size_t>(i)] == num_colours) x[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++x[static_cast<std::size_t>(i)];
      }
    }
    level.clear();
    for (auto& [key, g] : found) level.push_back(std::move(g));
  }
  return level;
}

BigInt count_models_polya(int order, int num_colours) {
  if (order < 0 || num_colours < 1) throw DimensionError("invalid order or colour count");
  BigInt total = 0;
  BigInt factorial_l;
  mpz_fac_ui(factorial_l.get_mpz_t(), static_cast<unsigned long>(order));
  std::vector<int> parts;
  // Enumerate partitions of `order` in non-increasing order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      long orbits = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        orbits += parts[i] / 2;
        for (std::size_t j = i + 1; j < parts.size(); ++j) orbits += std::gcd(parts[i], parts[j]);
      }
      // Class size l! / prod(i^{m_i} m_i!).
      BigInt denom = 1;
      std::map<int, int> mult;
      for (int p : parts) {
        denom *= p;
        ++mult[p];
      }
      for (const auto& [p, c] : mult) {
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(c));
        denom *= f;
      }
      BigInt power;
      mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(num_colours), static_cast<unsigned long>(orbits));
      total += (factorial_l / denom) * power;
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(order, order);
  return total / factorial_l;
}

}  // namespace flagcert
