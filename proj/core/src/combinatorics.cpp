#include "coupon/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace coupon {

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("COUPON_POISSON_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultEnumerationCap;
}

BigInt composition_count(unsigned total, std::size_t parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return binomial(total + parts - 1, total);
}

unsigned Composition::nonzero_count() const {
  return static_cast<unsigned>(
      std::count_if(parts.begin(), parts.end(), [](unsigned c) { return c != 0; }));
}

CompositionEnumerator::CompositionEnumerator(unsigned total, std::size_t parts,
                                             CompositionFilter filter, std::uint64_t cap,
                                             std::int64_t first_index)
    : filter_(filter) {
  current_.total = total;
  current_.parts.assign(parts, 0);
  current_.first_index = first_index;
  if (filter_.forced_zero && *filter_.forced_zero >= parts)
    throw std::invalid_argument("forced-zero slot " + std::to_string(*filter_.forced_zero) +
                                " out of range for " + std::to_string(parts) + " parts");
  const BigInt count = composition_count(total, parts);
  if (count > BigInt(std::to_string(cap)))
    throw ResourceCapExceeded("enumerating " + count.get_str() + " compositions exceeds cap " +
                              std::to_string(cap) + "; use the DP path instead");
}

bool CompositionEnumerator::step_unfiltered() {
  auto& c = current_.parts;
  const std::size_t p = c.size();
  if (!started_) {
    started_ = true;
    if (p == 0) return current_.total == 0;
    c.back() = current_.total;
    return true;
  }
  // Lexicographic successor: bump the rightmost slot that still has mass to
  // its right, and push the remaining mass minus one into the last slot.
  unsigned tail = 0;
  for (std::size_t i = p; i-- > 1;) {
    tail += c[i];
    if (tail > 0) {
      ++c[i - 1];
      std::fill(c.begin() + static_cast<std::ptrdiff_t>(i), c.end(), 0u);
      c.back() = tail - 1;
      return true;
    }
  }
  return false;
}

bool CompositionEnumerator::accepted() const {
  if (filter_.forced_zero && current_.parts[*filter_.forced_zero] != 0) return false;
  if (filter_.exactly_nonzero && current_.nonzero_count() != *filter_.exactly_nonzero)
    return false;
  return true;
}

bool CompositionEnumerator::next() {
  if (done_) return false;
  while (step_unfiltered()) {
    if (accepted()) return true;
  }
  done_ = true;
  return false;
}

CompositionEnumerator index_set(const CollectorInstance& instance, unsigned k,
                                CompositionFilter filter) {
  const auto parts = static_cast<std::size_t>(instance.to_collect() - 1);
  return CompositionEnumerator(k, parts, filter, enumeration_cap(), instance.m() + 1);
}

BigInt index_set_cardinality(unsigned k, unsigned l, std::size_t parts) {
  if (l < 1 || l > k)
    throw std::invalid_argument("need 1 <= l <= k, got l=" + std::to_string(l) +
                                ", k=" + std::to_string(k));
  if (l > parts) return 0;
  return binomial(parts, l) * binomial(k - 1, k - l);
}

namespace {

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt n_power(const CollectorInstance& instance, unsigned e) {
  return pow(BigInt(static_cast<long>(instance.n())), e);
}

}  // namespace

SumDecomposition sum_S(const CollectorInstance& instance, unsigned k) {
  // Numerators over n^k: plain[l] = sum prod (n-i)^{c_i};
  // multinomial[l] = sum (k!/prod c_i!) prod (n-i)^{c_i}.
  std::vector<BigInt> plain(k + 1, 0), multinomial(k + 1, 0);
  std::vector<BigInt> fact(k + 1);
  for (unsigned a = 0; a <= k; ++a) fact[a] = factorial(a);

  const std::int64_t n = instance.n();
  BigInt weight, denom, coef;
  for (const Composition& c : index_set(instance, k)) {
    weight = 1;
    denom = 1;
    unsigned l = 0, twos = 0;
    for (std::size_t s = 0; s < c.parts.size(); ++s) {
      const unsigned a = c.parts[s];
      if (a == 0) continue;
      ++l;
      if (a == 2) ++twos;
      const auto base = static_cast<unsigned long>(n - (c.first_index + static_cast<std::int64_t>(s)));
      for (unsigned t = 0; t < a; ++t) weight *= base;
      denom *= fact[a];
    }
    if (k >= 2 && l == k - 1 && twos != 1)
      throw std::logic_error("composition in I_{k,k-1} without exactly one part equal to 2");
    plain[l] += weight;
    mpz_divexact(coef.get_mpz_t(), fact[k].get_mpz_t(), denom.get_mpz_t());
    multinomial[l] += weight * coef;
  }

  SumDecomposition out;
  out.k = k;
  const BigInt nk = n_power(instance, k);
  out.total = 0;
  for (unsigned l = 0; l <= k; ++l) {
    out.per_l.push_back(ratio(plain[l], nk));
    out.remainders.push_back(out.per_l.back() - ratio(multinomial[l], fact[k] * nk));
    out.total += out.per_l.back();
  }
  return out;
}

std::vector<SumDecomposition> sum_S_dp(const CollectorInstance& instance, unsigned k_max) {
  const std::size_t K = k_max;
  // plain[k][l]: integer numerators over n^k. weighted[k][l]: rational
  // numerators (carrying the 1/prod c_i! factor) over n^k.
  std::vector<std::vector<BigInt>> plain(K + 1, std::vector<BigInt>(K + 1, 0));
  std::vector<std::vector<Rational>> weighted(K + 1, std::vector<Rational>(K + 1, 0));
  plain[0][0] = 1;
  weighted[0][0] = 1;

  std::vector<BigInt> wpow(K + 1);
  std::vector<Rational> wterm(K + 1);
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i) {
    const BigInt w = static_cast<long>(instance.n() - i);
    wpow[0] = 1;
    for (std::size_t a = 1; a <= K; ++a) {
      wpow[a] = wpow[a - 1] * w;
      wterm[a] = Rational(wpow[a], factorial(static_cast<unsigned>(a)));
      wterm[a].canonicalize();
    }
    // In-place knapsack update: descending k reads only smaller, untouched k.
    for (std::size_t k = K; k >= 1; --k) {
      for (std::size_t l = std::min(k, K); l >= 1; --l) {
        for (std::size_t a = 1; a <= k; ++a) {
          const std::size_t prev = k - a;
          if (l - 1 > prev) continue;
          if (plain[prev][l - 1] != 0) plain[k][l] += plain[prev][l - 1] * wpow[a];
          if (weighted[prev][l - 1] != 0) weighted[k][l] += weighted[prev][l - 1] * wterm[a];
        }
      }
    }
  }

  std::vector<SumDecomposition> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    const BigInt nk = n_power(instance, static_cast<unsigned>(k));
    auto& d = out[k];
    d.k = static_cast<unsigned>(k);
    d.total = 0;
    for (std::size_t l = 0; l <= k; ++l) {
      d.per_l.push_back(ratio(plain[k][l], nk));
      Rational w = weighted[k][l] / Rational(nk);
      d.remainders.push_back(d.per_l.back() - w);
      d.total += d.per_l.back();
    }
  }
  return out;
}

IdentityCheck s_kk_identity_check(const CollectorInstance& instance, unsigned k) {
  const SumDecomposition d = sum_S(instance, k);
  IdentityCheck out;
  out.lhs = d.S(k);
  const Rational lambda = lambda_moment(instance, 1);
  out.rhs = pow(lambda, k) / Rational(factorial(k));
  for (unsigned l = 1; l < k; ++l) out.rhs -= d.weighted(l);
  return out;
}

namespace {

void check_split_order(unsigned k) {
  if (k < 2) throw std::invalid_argument("R_{k,k-1} split needs k >= 2, got " + std::to_string(k));
}

Rational split_leading(const CollectorInstance& instance, unsigned k) {
  const Rational lambda = lambda_moment(instance, 1);
  const Rational lambda2 = lambda_moment(instance, 2);
  return lambda2 / 2 * pow(lambda, k - 2) / Rational(factorial(k - 2));
}

}  // namespace

RemainderSplit remainder_split(const CollectorInstance& instance, unsigned k) {
  check_split_order(k);
  RemainderSplit out;
  out.k = k;
  out.r_kk1 = sum_S(instance, k).R(k - 1);
  out.leading = split_leading(instance, k);

  const SumDecomposition lower = sum_S(instance, k - 2);
  Rational tail = 0;
  for (unsigned l = 1; l + 3 <= k; ++l) tail += lower.weighted(l);
  out.r1 = lambda_moment(instance, 2) / 2 * tail;

  // Each 0/1 composition of k-2 contributes its product times the sum of
  // (n-j)^2 over its support; the common denominator is n^k.
  const std::int64_t n = instance.n();
  BigInt acc = 0, weight, marks;
  for (const Composition& c : index_set(instance, k - 2, {.exactly_nonzero = k - 2, .forced_zero = std::nullopt})) {
    weight = 1;
    marks = 0;
    for (std::size_t s = 0; s < c.parts.size(); ++s) {
      if (c.parts[s] == 0) continue;
      const auto base = static_cast<unsigned long>(n - (c.first_index + static_cast<std::int64_t>(s)));
      weight *= base;
      marks += BigInt(base) * base;
    }
    acc += weight * marks;
  }
  out.r2 = ratio(acc, 2 * n_power(instance, k));
  return out;
}

RemainderSplit remainder_split_dp(const CollectorInstance& instance, unsigned k) {
  check_split_order(k);
  const auto sums = sum_S_dp(instance, k);
  RemainderSplit out;
  out.k = k;
  out.r_kk1 = sums[k].R(k - 1);
  out.leading = split_leading(instance, k);

  Rational tail = 0;
  for (unsigned l = 1; l + 3 <= k; ++l) tail += sums[k - 2].weighted(l);
  out.r1 = lambda_moment(instance, 2) / 2 * tail;

  // elementary[t]: sum over t-subsets of prod (n-i); marked[t]: same with an
  // extra factor sum_{j in subset} (n-j)^2.
  const std::size_t t_max = k - 2;
  std::vector<BigInt> elementary(t_max + 1, 0), marked(t_max + 1, 0);
  elementary[0] = 1;
  for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i) {
    const BigInt w = static_cast<long>(instance.n() - i);
    const BigInt w3 = w * w * w;
    for (std::size_t t = t_max; t >= 1; --t) {
      marked[t] += marked[t - 1] * w + elementary[t - 1] * w3;
      elementary[t] += elementary[t - 1] * w;
    }
  }
  out.r2 = ratio(marked[t_max], 2 * n_power(instance, k));
  return out;
}

}  // namespace coupon
