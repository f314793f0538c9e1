#pragma once

// Exact distribution of the centered waiting time W - (n - m), i.e. the
// number of superfluous draws, as a sum of independent shifted geometrics.

#include <cstddef>
#include <string_view>
#include <vector>

#include "coupon/model.hpp"
#include "coupon/numeric.hpp"

namespace coupon {

enum class NumericMode { rational, float_linear, log_float };

std::string_view to_string(NumericMode mode);
/// Accepts "rational", "float", "log" (and the enum spellings).
NumericMode parse_numeric_mode(std::string_view text);

/// Truncated probability vector for k = offset, ..., offset + K.
///
/// Invariant: probs >= 0, tail_mass >= 0 and sum(probs) + tail_mass = 1
/// (exactly for Rational, to ~1e-12 for double).
template <class T>
struct BasicPmf {
  int offset = 0;
  std::vector<T> probs;
  T tail_mass{};
  NumericMode mode = NumericMode::float_linear;
  /// log(probs[k]); filled in log_float mode only.
  std::vector<double> log_probs;

  std::size_t size() const { return probs.size(); }
  const T& operator[](std::size_t k) const { return probs.at(k); }
};

using ExactPmf = BasicPmf<Rational>;
using Pmf = BasicPmf<double>;

Pmf to_float(const ExactPmf& pmf);

inline constexpr std::size_t kDefaultRationalBitBudget = 1u << 22;

/// P(W~ = k), k <= K, by convolving the geometric stages one at a time:
/// g(k) = q g(k-1) + p f(k). O((n-m) K) operations.
///
/// Throws ResourceCapExceeded if a denominator outgrows `bit_budget` bits;
/// use the floating modes for such instances.
ExactPmf exact_pmf_dp_rational(const CollectorInstance& instance, std::size_t K,
                               std::size_t bit_budget = kDefaultRationalBitBudget);

/// Floating-point counterpart. NumericMode::rational runs the rational DP and
/// converts once at the end.
Pmf exact_pmf_dp(const CollectorInstance& instance, std::size_t K,
                 NumericMode mode = NumericMode::float_linear);

/// P(W~ = k) = (prod_{i=m+1}^{n} i/n) * S_k with S_k summed over enumerated
/// compositions. Throws ResourceCapExceeded past the enumeration cap.
ExactPmf exact_pmf_composition(const CollectorInstance& instance, std::size_t K);

/// E[W~] = sum_{i=m+1}^{n} (n - i)/i.
Rational exact_mean(const CollectorInstance& instance);

/// prod_{i=m+1}^{n} i/n = P(W~ = 0).
Rational stage_success_product(const CollectorInstance& instance);

}  // namespace coupon
