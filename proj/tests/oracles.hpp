#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it is compared against: brute-force odometers instead of
// lexicographic successors, a Markov chain over the number of distinct
// coupons instead of geometric convolution, and so on.

#include <cmath>
#include <cstdint>
#include <vector>

#include "coupon/model.hpp"
#include "coupon/numeric.hpp"

namespace coupon::oracle {

/// Every vector in {0..total}^parts whose entries sum to total, in odometer
/// (lexicographic) order.
inline std::vector<std::vector<unsigned>> brute_compositions(unsigned total, std::size_t parts) {
  std::vector<std::vector<unsigned>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> v(parts, 0);
  while (true) {
    unsigned sum = 0;
    for (unsigned x : v) sum += x;
    if (sum == total) out.push_back(v);
    std::size_t pos = parts;
    while (pos > 0) {
      --pos;
      if (v[pos] < total) {
        ++v[pos];
        break;
      }
      v[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

/// sum_{i=m+1}^{n} (1 - i/n)^j, one canonical rational per term.
inline Rational lambda_by_terms(const CollectorInstance& inst, unsigned j) {
  Rational acc = 0;
  for (std::int64_t i = inst.m() + 1; i <= inst.n(); ++i) {
    Rational q(inst.n() - i, inst.n());
    q.canonicalize();
    Rational t = 1;
    for (unsigned e = 0; e < j; ++e) t *= q;
    acc += t;
  }
  return acc;
}

/// S_k = sum over compositions of prod (1 - i/n)^{c_i}, from the odometer.
/// Optionally restricted to compositions with exactly `l` nonzero parts.
inline Rational brute_S(const CollectorInstance& inst, unsigned k, int l = -1) {
  const auto parts = static_cast<std::size_t>(inst.to_collect() - 1);
  Rational acc = 0;
  for (const auto& c : brute_compositions(k, parts)) {
    int nz = 0;
    Rational t = 1;
    for (std::size_t s = 0; s < parts; ++s) {
      if (c[s] == 0) continue;
      ++nz;
      const std::int64_t i = inst.m() + 1 + static_cast<std::int64_t>(s);
      Rational q(inst.n() - i, inst.n());
      q.canonicalize();
      for (unsigned e = 0; e < c[s]; ++e) t *= q;
    }
    if (l < 0 || nz == l) acc += t;
  }
  return acc;
}

/// Exact P(W~ = k), k <= K, from the Markov chain on (distinct coupons seen,
/// superfluous draws so far). From d distinct a draw is new w.p. (n-d)/n.
inline std::vector<Rational> markov_pmf(const CollectorInstance& inst, std::size_t K) {
  const std::int64_t n = inst.n(), r = inst.to_collect();
  // prob[d][j]: probability of being at d distinct with j superfluous draws.
  std::vector<std::vector<Rational>> prob(static_cast<std::size_t>(r + 1),
                                          std::vector<Rational>(K + 1, 0));
  prob[1][0] = 1;  // the first draw is always new
  for (std::int64_t d = 1; d < r; ++d) {
    Rational stay(d, n), move(n - d, n);
    stay.canonicalize();
    move.canonicalize();
    auto& cur = prob[static_cast<std::size_t>(d)];
    // Accumulate repeats within level d, then hand the mass to level d+1.
    for (std::size_t j = 1; j <= K; ++j) cur[j] += cur[j - 1] * stay;
    for (std::size_t j = 0; j <= K; ++j) prob[static_cast<std::size_t>(d + 1)][j] += cur[j] * move;
  }
  return prob[static_cast<std::size_t>(r)];
}

/// e^{-lambda} lambda^k / k! by a running product (no lgamma).
inline double poisson_by_product(double lambda, int k) {
  double p = std::exp(-lambda);
  for (int j = 1; j <= k; ++j) p *= lambda / j;
  return p;
}

}  // namespace coupon::oracle
