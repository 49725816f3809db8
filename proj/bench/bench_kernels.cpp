// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "kn3/builder.hpp"
#include "kn3/census.hpp"
#include "kn3/circuits.hpp"

using namespace kn3;

namespace {

std::vector<TransitionIndex> index_for(int n) {
  std::vector<TransitionIndex> index;
  for (const Circuit& c : build_even(n, true).circuits) index.emplace_back(c);
  return index;
}

void BM_PairScanSerial(benchmark::State& state) {
  const auto index = index_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_failing_pair_serial(index, true));
}

void BM_PairScanParallel(benchmark::State& state) {
  const auto index = index_for(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::first_failing_pair_parallel(index, true));
}

void BM_BuildAttemptsSerial(benchmark::State& state) {
  std::size_t first = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::build_attempts_serial(static_cast<int>(state.range(0)), true, 1, first, 16));
    first += 16;
  }
}

void BM_BuildAttemptsParallel(benchmark::State& state) {
  std::size_t first = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::build_attempts_parallel(static_cast<int>(state.range(0)), true, 1, first, 16));
    first += 16;
  }
}

}  // namespace

BENCHMARK(BM_PairScanSerial)->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(BM_PairScanParallel)->Arg(16)->Arg(32)->Arg(48);
BENCHMARK(BM_BuildAttemptsSerial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildAttemptsParallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
