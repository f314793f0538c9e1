#pragma once

// Exact and floating-point number helpers shared by every module.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace coupon {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a computation would exceed a configured resource budget
/// (enumeration cap, rational bit budget). Callers should switch paths.
class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nearest double (ties to even). mpq_get_d truncates toward zero instead.
double to_double(const Rational& q);

inline Rational make_rational(long num, unsigned long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, unsigned exponent);
BigInt pow(const BigInt& base, unsigned exponent);

BigInt factorial(unsigned k);
BigInt binomial(unsigned long n, unsigned long k);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Parses the output of to_string().
Rational parse_rational(const std::string& text);

}  // namespace coupon
