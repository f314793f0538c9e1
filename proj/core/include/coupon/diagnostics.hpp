#pragma once

// Schedules n -> m_n along which (n - m_n)/sqrt(n) -> sqrt(2 lambda),
// error-rate studies of the Poisson approximations, and numerical
// certification of the inequalities that control the approximation error.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coupon/exact.hpp"
#include "coupon/model.hpp"

namespace coupon {

/// One admissible schedule: m_n = n - round(sqrt(2 lambda n)).
struct ScheduleSpec {
  double lambda_target = 0.0;
  std::vector<std::int64_t> n_values;
  std::vector<CollectorInstance> instances;

  static constexpr std::string_view kRule = "m_n = n - round(sqrt(2*lambda*n))";
};

/// n - m_n for the rounding rule above.
std::int64_t schedule_to_collect(double lambda_target, std::int64_t n);

/// Throws std::invalid_argument for lambda_target <= 0, non-increasing
/// n_values, or any n where the rule gives m_n < 0 or n - m_n < 2.
ScheduleSpec build_schedule(double lambda_target, std::vector<std::int64_t> n_values);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Least-squares fit of log(y) against log(x). Needs >= 2 points, y > 0.
LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

struct ScalingRow {
  std::int64_t n = 0;
  std::int64_t m = 0;
  double lambda = 0.0;
  double lambda2 = 0.0;
  double e0 = 0.0;  // max_{k <= K} |exact - order0|
  double e1 = 0.0;  // max_{k <= K} |exact - order1|
};

struct ScalingReport {
  double lambda_target = 0.0;
  std::size_t K = 0;
  std::vector<ScalingRow> rows;
  /// Fitted only with >= 3 rows.
  std::optional<double> slope0;
  std::optional<double> slope1;
};

ScalingReport scaling_study(const ScheduleSpec& spec, std::size_t K);

/// Smallest C with |lambda_n - lambda| <= C / sqrt(n) on the schedule.
double lambda_convergence_constant(const ScheduleSpec& spec);

/// Smallest C with |lambda_{n,2} - (2 lambda_n)^{3/2} / (3 sqrt n)| <= C / n.
double lambda2_asymptotic_constant(const ScheduleSpec& spec);

/// 1/2 sum_{k <= K} |p_k - Poisson(mean)_k| + 1/2 |tail_p - tail_poisson|.
double total_variation_to_poisson(const Pmf& pmf, double mean);

// ---------------------------------------------------------------------------
// Inequality certification

/// Which statement of a bound a check evaluates. `printed` is the constant
/// exactly as published; `corrected` replaces a constant that is false in
/// some regimes by one that follows from the same argument. Checks that
/// need no correction are tagged `both`.
enum class BoundForm { both, printed, corrected };
enum class CheckStatus { holds, violated, skipped };

std::string_view to_string(BoundForm form);
std::string_view to_string(CheckStatus status);

struct BoundCheck {
  std::string name;    // "moment_decay", "s_kl_bound", "r2_bound", ...
  std::string detail;  // "k=3 l=2"
  BoundForm form = BoundForm::both;
  bool exact = false;  // decided in rational arithmetic
  double lhs = 0.0;
  double rhs = 0.0;
  CheckStatus status = CheckStatus::holds;
  std::string note;

  double margin() const { return rhs - lhs; }
};

enum class SumPath { automatic, enumeration, dp };

struct CertifyOptions {
  unsigned max_moment_order = kDefaultMaxMomentOrder;
  /// Relative slack for floating comparisons (bounds with non-squarable roots).
  double rtol = 1e-9;
  SumPath path = SumPath::automatic;
  /// `automatic` enumerates while sum_{k <= k_max} |I_k| stays below this.
  std::uint64_t enumeration_budget = 1'000'000;
};

struct CertificationReport {
  CollectorInstance instance;
  unsigned k_max = 0;
  std::string sum_path;  // "enumeration", "dp" or "none"
  std::vector<BoundCheck> checks;

  /// True when every non-skipped check for `form` (including `both`) holds.
  bool all_hold(BoundForm form) const;
  std::size_t count(CheckStatus status, BoundForm form) const;
};

/// With SumPath::enumeration, throws ResourceCapExceeded when the index sets
/// exceed the enumeration cap; `automatic` falls back to the DP instead.
CertificationReport certify_bounds(const CollectorInstance& instance, unsigned k_max,
                                   const CertifyOptions& options = {});

}  // namespace coupon
