#include "flagcert/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>

#include "flagcert/error.hpp"

namespace flagcert {

ParseError::ParseError(const std::string& source, std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(source + ":" + std::to_string(line) +
            (column > 0 ? ":" + std::to_string(column) : std::string()) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  BigInt out(std::string(digits), 10);
  if (s.front() == '-') out = -out;
  return out;
}

BigInt pow10(unsigned long e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
  return out;
}

Rational parse_decimal(std::string_view s) {
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view exp_part = s.substr(e + 1);
    std::string_view exp_digits = exp_part;
    if (!exp_digits.empty() && (exp_digits.front() == '-' || exp_digits.front() == '+')) {
      exp_digits.remove_prefix(1);
    }
    if (!all_digits(exp_digits) || exp_digits.size() > 6) {
      throw std::invalid_argument("bad exponent in '" + original + "'");
    }
    exponent = std::stol(std::string(exp_part));
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("empty number '" + original + "'");
  if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
    throw std::invalid_argument("not a number: '" + original + "'");
  }
  const std::string mantissa = std::string(int_part) + std::string(frac_part);
  BigInt num(mantissa.empty() ? std::string("0") : mantissa, 10);
  if (negative) num = -num;
  exponent -= static_cast<long>(frac_part.size());
  if (exponent >= 0) return Rational(BigInt(num * pow10(static_cast<unsigned long>(exponent))));
  return Rational(num, pow10(static_cast<unsigned long>(-exponent)));
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("empty rational token");
  if (const auto slash = token.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(token.substr(0, slash));
    const std::string_view den_text = token.substr(slash + 1);
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(token) + "'");
    const BigInt den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
    return Rational(num, den);
  }
  if (token.find_first_of(".eE") != std::string_view::npos) return parse_decimal(token);
  return Rational(parse_integer(token));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int significant_digits) const {
  if (significant_digits < 1) throw std::invalid_argument("significant_digits must be positive");
  if (is_zero()) return "0";
  const mpq_class a = abs().value_;
  // Find e with 10^e <= a < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 10));
  auto scale = [](long p) {
    return p >= 0 ? mpq_class(pow10(static_cast<unsigned long>(p)))
                  : mpq_class(BigInt(1), pow10(static_cast<unsigned long>(-p)));
  };
  while (a >= scale(e + 1)) ++e;
  while (a < scale(e)) --e;

  const long shift = significant_digits - 1 - e;
  mpq_class scaled = a * scale(shift);
  // Round half away from zero.
  BigInt digits = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  if (digits == pow10(static_cast<unsigned long>(significant_digits))) {
    digits /= 10;
    ++e;
  }
  std::string text = digits.get_str();
  // Strip trailing zeros of the mantissa.
  while (text.size() > 1 && text.back() == '0') text.pop_back();
  std::string out = sign() < 0 ? "-" : "";
  if (e < -6 || e >= significant_digits) {
    out += text.substr(0, 1);
    if (text.size() > 1) out += "." + text.substr(1);
    out += "e" + std::to_string(e);
  } else if (e < 0) {
    out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + text;
  } else {
    const auto int_digits = static_cast<std::size_t>(e + 1);
    if (text.size() <= int_digits) {
      out += text + std::string(int_digits - text.size(), '0');
    } else {
      out += text.substr(0, int_digits) + "." + text.substr(int_digits);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace flagcert
