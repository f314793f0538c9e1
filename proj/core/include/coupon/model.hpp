#pragma once

#include <cstdint>
#include <vector>

#include "coupon/numeric.hpp"

namespace coupon {

/// A collector sampling uniformly with replacement from `n` coupon types,
/// stopping once `n - m` distinct coupons have been seen.
///
/// Invariant: n >= 1 and 0 <= m <= n - 1. The constructor throws
/// std::invalid_argument otherwise. m = n - 1 (one coupon to collect) is a
/// valid degenerate instance whose waiting time is identically one draw.
class CollectorInstance {
 public:
  CollectorInstance(std::int64_t n, std::int64_t m);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return m_; }
  /// Number of distinct coupons to collect, n - m >= 1.
  std::int64_t to_collect() const { return n_ - m_; }

  /// Failure probability 1 - i/n of the geometric stage with index i.
  Rational failure(std::int64_t i) const;
  double failure_d(std::int64_t i) const {
    return static_cast<double>(n_ - i) / static_cast<double>(n_);
  }

  friend bool operator==(const CollectorInstance&, const CollectorInstance&) = default;

 private:
  std::int64_t n_;
  std::int64_t m_;
};

/// One summand of the geometric decomposition of the centered waiting time:
/// X + 1 ~ Geometric(i/n) on {1, 2, ...}, i in {m+1, ..., n}.
struct GeometricTerm {
  std::int64_t index;
  Rational success;  // i/n
  Rational failure;  // 1 - i/n

  /// P(X = j) for j >= 0 (failures before the first success).
  Rational pmf(unsigned j) const { return pow(failure, j) * success; }
  bool degenerate() const { return failure == 0; }
};

/// Stages i = m+1, ..., n in increasing order.
std::vector<GeometricTerm> geometric_terms(const CollectorInstance& instance);

/// Power sum lambda_{n,j} = sum_{i=m+1}^{n} (1 - i/n)^j, computed directly.
/// Throws std::invalid_argument for j == 0.
Rational lambda_moment(const CollectorInstance& instance, unsigned j);

/// (n-m)(n-m-1) / (2n); equals lambda_moment(instance, 1).
Rational lambda_closed_form(const CollectorInstance& instance);

/// (n-m)(n-m-1)(n-m-1/2) / (3n^2); equals lambda_moment(instance, 2).
Rational lambda2_closed_form(const CollectorInstance& instance);

inline constexpr unsigned kDefaultMaxMomentOrder = 12;

/// lambda_{n,1..J} in exact and floating form. values[j-1] holds order j.
struct MomentVector {
  CollectorInstance instance;
  std::vector<Rational> values;
  std::vector<double> values_d;

  unsigned max_order() const { return static_cast<unsigned>(values.size()); }
  const Rational& operator[](unsigned j) const { return values.at(j - 1); }
  double as_double(unsigned j) const { return values_d.at(j - 1); }
};

MomentVector moment_vector(const CollectorInstance& instance,
                           unsigned max_order = kDefaultMaxMomentOrder);

}  // namespace coupon
