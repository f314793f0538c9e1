#include "coupon/numeric.hpp"

#include <cmath>

namespace coupon {

double to_double(const Rational& q) {
  const int sign = sgn(q);
  if (sign == 0) return 0.0;
  const BigInt num = abs(q.get_num());
  const BigInt& den = q.get_den();
  // Scale so the integer quotient carries at least 64 significant bits.
  const long shift = 64 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  BigInt scaled = num, quotient, remainder;
  if (shift > 0) mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  BigInt divisor = den;
  if (shift < 0) mpz_mul_2exp(divisor.get_mpz_t(), divisor.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(), divisor.get_mpz_t());
  if (remainder != 0) mpz_setbit(quotient.get_mpz_t(), 0);  // sticky bit

  // Round the quotient to 53 bits, nearest-even.
  const long extra = static_cast<long>(mpz_sizeinbase(quotient.get_mpz_t(), 2)) - 53;
  BigInt mantissa;
  mpz_tdiv_q_2exp(mantissa.get_mpz_t(), quotient.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
  BigInt dropped;
  mpz_tdiv_r_2exp(dropped.get_mpz_t(), quotient.get_mpz_t(), static_cast<mp_bitcnt_t>(extra));
  BigInt half = 1;
  mpz_mul_2exp(half.get_mpz_t(), half.get_mpz_t(), static_cast<mp_bitcnt_t>(extra - 1));
  if (dropped > half || (dropped == half && mpz_odd_p(mantissa.get_mpz_t()))) ++mantissa;
  // Results in the subnormal range may round twice here.
  return sign * std::ldexp(mantissa.get_d(), static_cast<int>(extra - shift));
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // Powers of a reduced fraction stay reduced; the sign lives in the numerator.
  return out;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigInt factorial(unsigned k) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace coupon
