#include "flagcert/reconstruct.hpp"

#include <stdexcept>

namespace flagcert {

Rational rational_reconstruct(const Rational& x, const BigInt& max_den) {
  if (max_den < 1) throw std::invalid_argument("max_den must be at least 1");
  if (x.denominator() <= max_den) return x;

  // Convergents h/k of the continued fraction of x = num/den.
  BigInt num = x.numerator();
  BigInt den = x.denominator();
  // (h_prev, k_prev) = h_{-2}/k_{-2} = 0/1 and (h, k) = h_{-1}/k_{-1} = 1/0.
  BigInt h_prev = 0, h = 1;
  BigInt k_prev = 1, k = 0;
  while (den != 0) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const BigInt h_next = a * h + h_prev;
    const BigInt k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    const BigInt rem = num - a * den;
    num = den;
    den = rem;
  }
  return Rational(h, k);
}

Rational rational_reconstruct(std::string_view decimal, const BigInt& max_den) {
  return rational_reconstruct(Rational::parse(decimal), max_den);
}

Rational round_to_grid(const Rational& x, const BigInt& den) {
  if (den < 1) throw std::invalid_argument("grid denominator must be at least 1");
  const mpq_class scaled = x.value() * den;
  const BigInt n = scaled.get_num();
  const BigInt d = scaled.get_den();
  BigInt q;
  // Half away from zero: floor((|n|*2 + d) / (2d)) with the sign restored.
  const BigInt abs_n = abs(n);
  q = (abs_n * 2 + d) / (d * 2);
  if (n < 0) q = -q;
  return Rational(q, den);
}

}  // namespace flagcert
