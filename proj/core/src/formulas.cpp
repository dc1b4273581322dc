#include "flagcert/formulas.hpp"

#include <stdexcept>

namespace flagcert {
namespace {

std::int64_t choose3(std::int64_t m) { return m < 3 ? 0 : m * (m - 1) * (m - 2) / 6; }

}  // namespace

std::int64_t goodman(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative order");
  if (n % 2 == 0) return n * (n - 2) * (n - 4) / 24;
  if (n % 4 == 1) return n * (n - 1) * (n - 5) / 24;
  return (n + 1) * (n - 3) * (n - 4) / 24;
}

std::int64_t corollary_value(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("negative order");
  const std::int64_t m = n / 5;
  const std::int64_t r = n % 5;
  return r * choose3(m + 1) + (5 - r) * choose3(m);
}

}  // namespace flagcert
