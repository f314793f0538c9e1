#pragma once

// Poisson approximation of P(W~ = k) and its first-order correction.
//
// With lambda = lambda_{n,1} and lambda2 = lambda_{n,2}, write
// pi(k) = e^{-lambda} lambda^k / k! (and pi(k) = 0 for k < 0). Then
//
//   order0(k) = pi(k)
//   order1(k) = pi(k) + (pi(k-2) - pi(k)) * lambda2 / 2
//
// which reproduces the separate k = 0, k = 1 and k >= 2 forms, with an
// O(1/n) error along admissible schedules.

#include <cstddef>
#include <optional>
#include <vector>

#include "coupon/model.hpp"

namespace coupon {

/// e^{-lambda} lambda^k / k!, evaluated through lgamma. lambda >= 0.
double poisson_order0(double lambda, int k);

/// order1(k) from the moments alone.
double poisson_order1(double lambda, double lambda2, int k);

struct ApproxResult {
  int k = 0;
  double order0 = 0.0;
  double order1 = 0.0;
  std::optional<double> exact;

  /// Signed errors exact - approx; require `exact`.
  double err0() const { return exact.value() - order0; }
  double err1() const { return exact.value() - order1; }
};

/// Moments come from the exact rational lambda_{n,1}, lambda_{n,2}.
ApproxResult poisson_order1(const CollectorInstance& instance, int k);

/// Rows k = 0..K with `exact` filled from the floating DP.
std::vector<ApproxResult> comparison_table(const CollectorInstance& instance, std::size_t K);

/// The three displayed cases written out literally (k = 0, k = 1, k >= 2).
double theorem_cases(double lambda, double lambda2, int k);

/// order1 reassembled from the first-order form of S_k and the leading
/// product-vs-exponential gap: e^{-lambda} S_k^{(1)} - gap_leading * S_k^{(0)}.
double theorem_via_sk(double lambda, double lambda2, int k);

/// e^{-lambda_n} - prod_{i=m+1}^{n} i/n, split into its leading part
/// e^{-lambda_n} lambda_{n,2} / 2 and the residual.
struct ProductGap {
  double gap = 0.0;
  double leading = 0.0;
  double residual = 0.0;
};

ProductGap product_exponential_gap(const CollectorInstance& instance);

/// sqrt(2 lambda / n) < 1/2, the large-n condition used by the tail bounds.
bool tail_bound_applicable(double lambda, double n);

/// sum_{j >= j0} lambda_{n,j} / j, summed until terms are negligible.
double moment_tail_sum(const CollectorInstance& instance, unsigned j0);

/// 2 lambda (2 lambda / n)^{(j0-1)/2}.
double moment_tail_bound(double lambda, double n, unsigned j0);

/// e^{-lambda} 4 lambda^2 (lambda + 1) / n.
double product_residual_bound(double lambda, double n);

}  // namespace coupon
