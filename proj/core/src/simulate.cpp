#include "coupon/simulate.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

namespace coupon {

std::string_view to_string(SimMethod method) {
  return method == SimMethod::draw ? "draw" : "geometric";
}

SimMethod parse_sim_method(std::string_view text) {
  if (text == "draw") return SimMethod::draw;
  if (text == "geometric") return SimMethod::geometric;
  throw std::invalid_argument("unknown simulation method '" + std::string(text) + "'");
}

double EmpiricalPmf::p_hat(int k) const {
  if (samples == 0) return 0.0;
  const auto it = counts.find(k);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples);
}

double EmpiricalPmf::se(int k) const {
  if (samples == 0) return 0.0;
  const double p = p_hat(k);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform on (0, 1): never 0, so log() is finite.
double open_unit(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

__extension__ using u128 = unsigned __int128;

// Lemire's multiply-shift with rejection; unbiased on [0, bound).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  u128 product = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      product = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

class DrawSampler {
 public:
  explicit DrawSampler(const CollectorInstance& instance)
      : n_(static_cast<std::uint64_t>(instance.n())),
        target_(static_cast<std::uint64_t>(instance.to_collect())),
        stamp_(n_, 0) {}

  int operator()(std::mt19937_64& rng) {
    ++generation_;
    std::uint64_t distinct = 0, draws = 0;
    while (distinct < target_) {
      ++draws;
      auto& s = stamp_[bounded(rng, n_)];
      if (s != generation_) {
        s = generation_;
        ++distinct;
      }
    }
    return static_cast<int>(draws - target_);
  }

 private:
  std::uint64_t n_;
  std::uint64_t target_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t generation_ = 0;
};

class GeometricSampler {
 public:
  explicit GeometricSampler(const CollectorInstance& instance) {
    // Stage i = n has q = 0 and contributes nothing.
    for (std::int64_t i = instance.m() + 1; i < instance.n(); ++i)
      log_failure_.push_back(std::log(instance.failure_d(i)));
  }

  int operator()(std::mt19937_64& rng) const {
    // floor(log U / log q) has P(X >= j) = q^j.
    std::int64_t total = 0;
    for (double lq : log_failure_) total += static_cast<std::int64_t>(std::floor(std::log(open_unit(rng)) / lq));
    return static_cast<int>(total);
  }

 private:
  std::vector<double> log_failure_;
};

template <class Sampler>
std::map<int, std::uint64_t> run_worker(Sampler sampler, std::uint64_t seed, std::uint64_t samples) {
  std::mt19937_64 rng(seed);
  std::map<int, std::uint64_t> counts;
  for (std::uint64_t s = 0; s < samples; ++s) ++counts[sampler(rng)];
  return counts;
}

}  // namespace

std::uint64_t child_seed(std::uint64_t seed, unsigned worker) {
  std::uint64_t state = seed;
  const std::uint64_t base = splitmix64(state);
  state = base ^ (0x5851f42d4c957f2dULL * (static_cast<std::uint64_t>(worker) + 1));
  return splitmix64(state);
}

EmpiricalPmf simulate_waiting_time(const SimConfig& config) {
  if (config.samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (config.workers == 0) throw std::invalid_argument("workers must be >= 1");

  const unsigned workers = config.workers;
  std::vector<std::map<int, std::uint64_t>> partial(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t share = config.samples / workers + (w < config.samples % workers ? 1 : 0);
      const std::uint64_t seed = child_seed(config.seed, w);
      threads.emplace_back([&, w, share, seed] {
        if (config.method == SimMethod::draw)
          partial[w] = run_worker(DrawSampler(config.instance), seed, share);
        else
          partial[w] = run_worker(GeometricSampler(config.instance), seed, share);
      });
    }
  }

  EmpiricalPmf out;
  out.samples = config.samples;
  out.rng = std::string(kRngDescription);
  for (const auto& counts : partial)
    for (const auto& [k, c] : counts) out.counts[k] += c;
  return out;
}

ChiSquareResult two_sample_chi_square(const EmpiricalPmf& a, const EmpiricalPmf& b, int pooled_from) {
  if (a.samples == 0 || b.samples == 0) throw std::invalid_argument("empty sample");
  if (pooled_from < 1) throw std::invalid_argument("pooled_from must be >= 1");
  const auto bins = static_cast<std::size_t>(pooled_from) + 1;
  std::vector<double> ca(bins, 0.0), cb(bins, 0.0);
  for (const auto& [k, c] : a.counts) ca[std::min<std::size_t>(static_cast<std::size_t>(k), bins - 1)] += static_cast<double>(c);
  for (const auto& [k, c] : b.counts) cb[std::min<std::size_t>(static_cast<std::size_t>(k), bins - 1)] += static_cast<double>(c);

  const double na = static_cast<double>(a.samples), nb = static_cast<double>(b.samples);
  const double wa = std::sqrt(nb / na), wb = std::sqrt(na / nb);
  ChiSquareResult out;
  unsigned used = 0;
  for (std::size_t i = 0; i < bins; ++i) {
    const double both = ca[i] + cb[i];
    if (both == 0.0) continue;
    ++used;
    const double d = wa * ca[i] - wb * cb[i];
    out.statistic += d * d / both;
  }
  out.dof = used > 0 ? used - 1 : 0;
  out.p_value = out.dof == 0 ? 1.0 : boost::math::gamma_q(out.dof / 2.0, out.statistic / 2.0);
  return out;
}

}  // namespace coupon
