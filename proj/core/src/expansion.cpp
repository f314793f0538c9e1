#include "coupon/expansion.hpp"

#include <cmath>
#include <stdexcept>

#include "coupon/exact.hpp"

namespace coupon {

double poisson_order0(double lambda, int k) {
  if (lambda < 0.0) throw std::invalid_argument("Poisson mean must be nonnegative");
  if (k < 0) return 0.0;
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(k * std::log(lambda) - lambda - std::lgamma(k + 1.0));
}

double poisson_order1(double lambda, double lambda2, int k) {
  const double pk = poisson_order0(lambda, k);
  return pk + (poisson_order0(lambda, k - 2) - pk) * lambda2 / 2.0;
}

ApproxResult poisson_order1(const CollectorInstance& instance, int k) {
  const double lambda = to_double(lambda_moment(instance, 1));
  const double lambda2 = to_double(lambda_moment(instance, 2));
  ApproxResult r;
  r.k = k;
  r.order0 = poisson_order0(lambda, k);
  r.order1 = poisson_order1(lambda, lambda2, k);
  return r;
}

std::vector<ApproxResult> comparison_table(const CollectorInstance& instance, std::size_t K) {
  const Pmf exact = exact_pmf_dp(instance, K, NumericMode::float_linear);
  std::vector<ApproxResult> rows;
  rows.reserve(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    rows.push_back(poisson_order1(instance, static_cast<int>(k)));
    rows.back().exact = exact[k];
  }
  return rows;
}

double theorem_cases(double lambda, double lambda2, int k) {
  const double e = std::exp(-lambda);
  if (k == 0) return e - e * lambda2 / 2.0;
  if (k == 1) return e * lambda - e * lambda * lambda2 / 2.0;
  const double pk = std::pow(lambda, k) / std::tgamma(k + 1.0);
  const double pk2 = std::pow(lambda, k - 2) / std::tgamma(k - 1.0);
  return e * pk + e * (pk2 - pk) * lambda2 / 2.0;
}

double theorem_via_sk(double lambda, double lambda2, int k) {
  const double e = std::exp(-lambda);
  const auto mono = [lambda](int j) {
    return j < 0 ? 0.0 : std::pow(lambda, j) / std::tgamma(j + 1.0);
  };
  const double s_first_order = mono(k) + lambda2 / 2.0 * mono(k - 2);
  const double gap_leading = e * lambda2 / 2.0;
  return e * s_first_order - gap_leading * mono(k);
}

namespace {

// log(1 - q) + q without cancellation for small q.
double log1m_plus(double q) {
  if (q < 1e-3) {
    double term = q * q, sum = 0.0;
    for (int j = 2; j <= 9; ++j, term *= q) sum -= term / j;
    return sum;
  }
  return std::log1p(-q) + q;
}

}  // namespace

ProductGap product_exponential_gap(const CollectorInstance& instance) {
  const double lambda = to_double(lambda_moment(instance, 1));
  const double lambda2 = to_double(lambda_moment(instance, 2));
  // log prod(i/n) + lambda = sum_i [log(1 - q_i) + q_i]
  double excess = 0.0;
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i)
    excess += log1m_plus(instance.failure_d(i));
  ProductGap out;
  const double e = std::exp(-lambda);
  out.gap = -e * std::expm1(excess);
  out.leading = e * lambda2 / 2.0;
  out.residual = out.gap - out.leading;
  return out;
}

bool tail_bound_applicable(double lambda, double n) { return std::sqrt(2.0 * lambda / n) < 0.5; }

double moment_tail_sum(const CollectorInstance& instance, unsigned j0) {
  if (j0 == 0) throw std::invalid_argument("j0 must be >= 1");
  std::vector<double> q;
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i) q.push_back(instance.failure_d(i));
  std::vector<double> powers(q.size(), 1.0);
  double sum = 0.0;
  for (unsigned j = 1; j < 100000; ++j) {
    double moment = 0.0;
    for (std::size_t s = 0; s < q.size(); ++s) {
      powers[s] *= q[s];
      moment += powers[s];
    }
    if (j < j0) continue;
    const double term = moment / j;
    sum += term;
    if (term <= 1e-18 * sum || term == 0.0) break;
  }
  return sum;
}

double moment_tail_bound(double lambda, double n, unsigned j0) {
  return 2.0 * lambda * std::pow(2.0 * lambda / n, (static_cast<double>(j0) - 1.0) / 2.0);
}

double product_residual_bound(double lambda, double n) {
  return std::exp(-lambda) * 4.0 * lambda * lambda * (lambda + 1.0) / n;
}

}  // namespace coupon
