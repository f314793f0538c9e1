#include <benchmark/benchmark.h>

#include "coupon/combinatorics.hpp"
#include "coupon/diagnostics.hpp"
#include "coupon/exact.hpp"
#include "coupon/simulate.hpp"

namespace {

using namespace coupon;

// Instances on the lambda = 2 schedule: n - m = round(sqrt(4n)).
CollectorInstance on_schedule(std::int64_t n) { return CollectorInstance(n, n - schedule_to_collect(2.0, n)); }

void BM_PmfRational(benchmark::State& state) {
  const auto inst = on_schedule(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_pmf_dp_rational(inst, 25));
}
BENCHMARK(BM_PmfRational)->Arg(100)->Arg(400)->Arg(1600)->Unit(benchmark::kMillisecond);

void BM_PmfFloat(benchmark::State& state) {
  const auto inst = on_schedule(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_pmf_dp(inst, 25, NumericMode::float_linear));
}
BENCHMARK(BM_PmfFloat)->Arg(100)->Arg(1600)->Arg(25600);

void BM_PmfLog(benchmark::State& state) {
  const auto inst = on_schedule(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_pmf_dp(inst, 25, NumericMode::log_float));
}
BENCHMARK(BM_PmfLog)->Arg(100)->Arg(1600)->Arg(25600);

void BM_PmfComposition(benchmark::State& state) {
  const CollectorInstance inst(60, 48);
  const auto K = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exact_pmf_composition(inst, K));
}
BENCHMARK(BM_PmfComposition)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_SumSDp(benchmark::State& state) {
  const CollectorInstance inst(60, 48);
  const auto K = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sum_S_dp(inst, K));
}
BENCHMARK(BM_SumSDp)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (const auto& c : enumerate_compositions(k, 11)) count += c.parts[0];
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 8, 2);

void BM_Simulate(benchmark::State& state) {
  const auto method = state.range(0) == 0 ? SimMethod::draw : SimMethod::geometric;
  const auto inst = on_schedule(1600);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_waiting_time({inst, 10000, seed++, method, 1}));
  state.SetItemsProcessed(state.iterations() * 10000);
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Simulate)->Arg(0)->Arg(1)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const auto inst = on_schedule(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify_bounds(inst, 8));
}
BENCHMARK(BM_Certify)->Arg(100)->Arg(1600)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
