#include <benchmark/benchmark.h>

#include "interleave/parser.hpp"
#include "interleave/sweeps.hpp"

using namespace interleave;

static void BM_SweepSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_trees_serial(n));
}

static void BM_SweepParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_trees(n));
}

static void BM_SampleSerial(benchmark::State& state) {
  const WeightedTree t(parse_process("a.(b.(c || d.e) || f.(g || h.(i || j)) || k)"));
  for (auto _ : state) benchmark::DoNotOptimize(sample_runs_serial(t, 1, static_cast<std::size_t>(state.range(0))));
}

static void BM_SampleParallel(benchmark::State& state) {
  const WeightedTree t(parse_process("a.(b.(c || d.e) || f.(g || h.(i || j)) || k)"));
  for (auto _ : state) benchmark::DoNotOptimize(sample_runs(t, 1, static_cast<std::size_t>(state.range(0))));
}

BENCHMARK(BM_SweepSerial)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
