#pragma once

// Seeded Monte Carlo estimates of the distribution of W~.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "coupon/model.hpp"

namespace coupon {

enum class SimMethod {
  draw,       // literal uniform draws until n - m distinct coupons are seen
  geometric,  // sum of independent Geometric(i/n) - 1 variates
};

std::string_view to_string(SimMethod method);
SimMethod parse_sim_method(std::string_view text);

struct SimConfig {
  CollectorInstance instance;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  SimMethod method = SimMethod::geometric;
  unsigned workers = 1;
};

struct EmpiricalPmf {
  std::map<int, std::uint64_t> counts;
  std::uint64_t samples = 0;
  /// Generator and seed-splitting scheme, for audit trails.
  std::string rng;

  double p_hat(int k) const;
  /// sqrt(p(1-p)/samples).
  double se(int k) const;
  int max_k() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

inline constexpr std::string_view kRngDescription = "mt19937_64 seeded by splitmix64(seed, worker)";

/// Seed for worker `worker`: splitmix64 applied to seed and worker index.
std::uint64_t child_seed(std::uint64_t seed, unsigned worker);

/// Splits the sample budget evenly over `workers` threads (the first
/// samples % workers workers take one extra). Results depend only on
/// (seed, workers, method), never on scheduling.
EmpiricalPmf simulate_waiting_time(const SimConfig& config);

struct ChiSquareResult {
  double statistic = 0.0;
  unsigned dof = 0;
  double p_value = 1.0;
};

/// Two-sample chi-square homogeneity test over bins 0..pooled_from-1 plus a
/// pooled bin for k >= pooled_from. Empty bins are dropped.
ChiSquareResult two_sample_chi_square(const EmpiricalPmf& a, const EmpiricalPmf& b,
                                      int pooled_from = 10);

}  // namespace coupon
