#include "coupon/exact.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "coupon/combinatorics.hpp"

namespace coupon {

std::string_view to_string(NumericMode mode) {
  switch (mode) {
    case NumericMode::rational:
      return "rational";
    case NumericMode::float_linear:
      return "float";
    case NumericMode::log_float:
      return "log";
  }
  return "?";
}

NumericMode parse_numeric_mode(std::string_view text) {
  if (text == "rational") return NumericMode::rational;
  if (text == "float" || text == "float_linear") return NumericMode::float_linear;
  if (text == "log" || text == "log_float") return NumericMode::log_float;
  throw std::invalid_argument("unknown numeric mode '" + std::string(text) + "'");
}

Pmf to_float(const ExactPmf& pmf) {
  Pmf out;
  out.offset = pmf.offset;
  out.mode = pmf.mode;
  out.probs.reserve(pmf.size());
  for (const auto& p : pmf.probs) out.probs.push_back(to_double(p));
  out.tail_mass = to_double(pmf.tail_mass);
  return out;
}

ExactPmf exact_pmf_dp_rational(const CollectorInstance& instance, std::size_t K,
                               std::size_t bit_budget) {
  std::vector<Rational> f(K + 1, 0), g(K + 1);
  f[0] = 1;
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i) {
    const Rational p = make_rational(i, static_cast<unsigned long>(instance.n()));
    const Rational q = instance.failure(i);
    g[0] = p * f[0];
    for (std::size_t k = 1; k <= K; ++k) g[k] = q * g[k - 1] + p * f[k];
    f.swap(g);
    if (mpz_sizeinbase(f[K].get_den_mpz_t(), 2) > bit_budget)
      throw ResourceCapExceeded("rational DP exceeded bit budget of " + std::to_string(bit_budget) +
                                " bits; use float mode");
  }
  ExactPmf out;
  out.mode = NumericMode::rational;
  out.tail_mass = 1;
  for (const auto& p : f) out.tail_mass -= p;
  out.probs = std::move(f);
  return out;
}

namespace {

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

Pmf linear_dp(const CollectorInstance& instance, std::size_t K) {
  std::vector<double> f(K + 1, 0.0), g(K + 1);
  f[0] = 1.0;
  const double n = static_cast<double>(instance.n());
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i) {
    const double p = static_cast<double>(i) / n;
    const double q = instance.failure_d(i);
    g[0] = p * f[0];
    for (std::size_t k = 1; k <= K; ++k) g[k] = q * g[k - 1] + p * f[k];
    f.swap(g);
  }
  Pmf out;
  out.mode = NumericMode::float_linear;
  double total = 0.0;
  for (double p : f) total += p;
  out.tail_mass = std::max(0.0, 1.0 - total);
  out.probs = std::move(f);
  return out;
}

Pmf log_dp(const CollectorInstance& instance, std::size_t K) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> f(K + 1, kNegInf), g(K + 1);
  f[0] = 0.0;
  const double n = static_cast<double>(instance.n());
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i) {
    const double lp = std::log(static_cast<double>(i) / n);
    const double lq = std::log(instance.failure_d(i));
    g[0] = lp + f[0];
    for (std::size_t k = 1; k <= K; ++k) g[k] = log_add(lq + g[k - 1], lp + f[k]);
    f.swap(g);
  }
  Pmf out;
  out.mode = NumericMode::log_float;
  double log_total = kNegInf;
  for (double lf : f) {
    log_total = log_add(log_total, lf);
    out.probs.push_back(std::exp(lf));
  }
  out.tail_mass = std::max(0.0, -std::expm1(log_total));
  out.log_probs = std::move(f);
  return out;
}

}  // namespace

Pmf exact_pmf_dp(const CollectorInstance& instance, std::size_t K, NumericMode mode) {
  switch (mode) {
    case NumericMode::rational:
      return to_float(exact_pmf_dp_rational(instance, K));
    case NumericMode::float_linear:
      return linear_dp(instance, K);
    case NumericMode::log_float:
      return log_dp(instance, K);
  }
  throw std::invalid_argument("bad numeric mode");
}

Rational stage_success_product(const CollectorInstance& instance) {
  BigInt num = 1;
  for (std::int64_t i = instance.m() + 1; i <= instance.n(); ++i) num *= static_cast<long>(i);
  Rational out(num, pow(BigInt(static_cast<long>(instance.n())),
                        static_cast<unsigned>(instance.to_collect())));
  out.canonicalize();
  return out;
}

ExactPmf exact_pmf_composition(const CollectorInstance& instance, std::size_t K) {
  const Rational product = stage_success_product(instance);
  ExactPmf out;
  out.mode = NumericMode::rational;
  out.tail_mass = 1;
  for (std::size_t k = 0; k <= K; ++k) {
    out.probs.push_back(product * sum_S(instance, static_cast<unsigned>(k)).total);
    out.tail_mass -= out.probs.back();
  }
  return out;
}

Rational exact_mean(const CollectorInstance& instance) {
  Rational mean = 0;
  for (std::int64_t i = instance.m() + 1; i <= instance.n(); ++i) mean += make_rational(instance.n() - i, static_cast<unsigned long>(i));
  mean.canonicalize();
  return mean;
}

}  // namespace coupon
