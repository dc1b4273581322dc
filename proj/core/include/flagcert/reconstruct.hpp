#pragma once

#include <string_view>

#include "flagcert/rational.hpp"

namespace flagcert {

/// Default denominator bound for rounding solver output; the shipped
/// certificate's largest denominator is 4,000,000.
inline const BigInt kDefaultMaxDenominator{10'000'000};

/// Last continued-fraction convergent of x whose denominator does not exceed
/// max_den. Returns x itself when x's denominator is already within the bound.
Rational rational_reconstruct(const Rational& x, const BigInt& max_den);

/// Same, with x given as decimal text parsed exactly.
Rational rational_reconstruct(std::string_view decimal, const BigInt& max_den);

/// Nearest multiple of 1/den (ties away from zero), in lowest terms.
Rational round_to_grid(const Rational& x, const BigInt& den);

}  // namespace flagcert
