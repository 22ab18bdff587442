// Serial reference vs OpenMP kernels.  Run with OMP_NUM_THREADS set to
// compare thread counts.

#include <benchmark/benchmark.h>

#include "hurwitz/sweep.hpp"

using namespace hurwitz;

static void BM_TransformSerial(benchmark::State& state) {
  const auto pairs = random_pairs(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(transform_rows_serial(pairs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

static void BM_TransformParallel(benchmark::State& state) {
  const auto pairs = random_pairs(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(transform_rows(pairs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

BENCHMARK(BM_TransformSerial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_TransformParallel)->Arg(10000)->Arg(100000);

static std::vector<OscBlock> sweep_blocks() {
  std::vector<OscBlock> blocks;
  for (double omega : {0.5, 1.0, 2.0})
    for (double c : {0.0, 1.0, 8.0})
      for (int L = 0; L <= 2; ++L) blocks.push_back({omega, c, L, 3});
  return blocks;
}

static void BM_SweepSerial(benchmark::State& state) {
  const auto blocks = sweep_blocks();
  Grid g;
  g.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oscillator_sweep_serial(blocks, g));
}

static void BM_SweepParallel(benchmark::State& state) {
  const auto blocks = sweep_blocks();
  Grid g;
  g.n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oscillator_sweep(blocks, g));
}

BENCHMARK(BM_SweepSerial)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
