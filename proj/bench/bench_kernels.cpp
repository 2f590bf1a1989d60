// Serial reference kernels against their OpenMP counterparts.
//   ./dpfib_bench --benchmark_filter=Enumerate
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "dpfib/sweep.hpp"

namespace {

const dpfib::EnumerationRange kRange{20, -60, 60};

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::enumerate_serial(kRange));
  state.SetItemsProcessed(state.iterations() * kRange.family_count());
}
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::enumerate_parallel(kRange));
  state.SetItemsProcessed(state.iterations() * kRange.family_count());
}
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_IdentitiesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::check_identities_serial(kRange));
}
BENCHMARK(BM_IdentitiesSerial)->Unit(benchmark::kMillisecond);

void BM_IdentitiesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::check_identities_parallel(kRange));
}
BENCHMARK(BM_IdentitiesParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_OracleSweepSerial(benchmark::State& state) {
  const dpfib::OracleSweepConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::oracle_sweep_serial(cfg));
}
BENCHMARK(BM_OracleSweepSerial)->Unit(benchmark::kMillisecond);

void BM_OracleSweepParallel(benchmark::State& state) {
  const dpfib::OracleSweepConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::oracle_sweep_parallel(cfg));
}
BENCHMARK(BM_OracleSweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

std::vector<std::uint64_t> seeds(std::size_t count) {
  std::vector<std::uint64_t> s(count);
  for (std::size_t i = 0; i < count; ++i) s[i] = i + 1;
  return s;
}

void BM_Dp2Serial(benchmark::State& state) {
  const auto s = seeds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::dp2_sweep_serial(s));
}
BENCHMARK(BM_Dp2Serial)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Dp2Parallel(benchmark::State& state) {
  const auto s = seeds(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dpfib::dp2_sweep_parallel(s));
}
BENCHMARK(BM_Dp2Parallel)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
