// Serial and OpenMP enumeration against the symbolic search.
#include "plog/jline_search.hpp"

#include <benchmark/benchmark.h>

namespace {

using plog::Formula;

// Satisfiable only on larger models, so the kernels do real work.
const Formula& target(int which) {
  static const Formula ts[] = {
      plog::box_normalize(plog::parse_formula("<0>p & <0>~p & [0](p -> <1>q)")),
      plog::box_normalize(plog::parse_formula("<1>(p & <0>q) & [0]~q & <0><0>T")),
      plog::box_normalize(plog::parse_formula("<0>[1]F & <1><1>p & [0][0]~p")),
  };
  return ts[which];
}

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        plog::enumerate_root_search(target(state.range(0)), 2, 5, plog::Execution::Serial));
}

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        plog::enumerate_root_search(target(state.range(0)), 2, 5, plog::Execution::Parallel));
}

void BM_Symbolic(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(plog::symbolic_root_search(target(state.range(0)), 2, plog::SearchLimits{5}));
}

BENCHMARK(BM_EnumerateSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Symbolic)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
