// OpenMP sweeps against their serial references. Run with
// OMP_NUM_THREADS=k to compare thread counts.

#include <benchmark/benchmark.h>

#include "permdek/dek.hpp"
#include "permdek/enumerate.hpp"

namespace {

using namespace permdek;

void BM_CountObtainable(benchmark::State& state) {
  const auto config = MachineConfig::parse("two-stacks", true);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_obtainable(config, n).count);
}

void BM_CountObtainableSerial(benchmark::State& state) {
  const auto config = MachineConfig::parse("two-stacks", true);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_obtainable_serial(config, n).count);
}

void BM_CountWinnable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_winnable(n));
}

void BM_CountWinnableSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_winnable_serial(n));
}

void BM_Avoid312Sweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto pred = [](const Permutation& p) { return avoids_312(p); };
  for (auto _ : state) benchmark::DoNotOptimize(count_permutations_if(n, pred));
}

void BM_Avoid312SweepSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto pred = [](const Permutation& p) { return avoids_312(p); };
  for (auto _ : state) benchmark::DoNotOptimize(count_permutations_if_serial(n, pred));
}

BENCHMARK(BM_CountObtainable)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountObtainableSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountWinnable)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountWinnableSerial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Avoid312Sweep)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Avoid312SweepSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
