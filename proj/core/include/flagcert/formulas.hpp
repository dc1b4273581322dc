#pragma once

#include <cstdint>

namespace flagcert {

/// Goodman's minimum number of monochromatic triangles over 2-colourings of K_n.
std::int64_t goodman(std::int64_t n);

/// r·C(m+1,3) + (5-r)·C(m,3) with n = 5m + r: the triangle count of the balanced
/// five-class blow-up. It equals the 3-colour minimum only for n beyond an
/// unquantified threshold; at n = 17 it gives 11 while the true minimum is 5.
std::int64_t corollary_value(std::int64_t n);

/// Documented constants (not recomputed): R_3(K_3) and the 3-colour minimum at n = 17.
inline constexpr int kRamseyR3K3 = 17;
inline constexpr int kMinMonoTrianglesK17ThreeColours = 5;

}  // namespace flagcert
