#include <benchmark/benchmark.h>

#include "diffseq/coloring.hpp"
#include "diffseq/engine.hpp"
#include "diffseq/exact_delta.hpp"

using namespace diffseq;

static void BM_Expand(benchmark::State& state) {
  const Coloring s = construct_kappa(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(expand(s));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * s.size() / 8));
}
BENCHMARK(BM_Expand)->DenseRange(6, 10, 2);

static void BM_LongestMonoKappa(benchmark::State& state) {
  const Coloring s = construct_kappa(static_cast<std::size_t>(state.range(0)));
  const GapSet gaps;
  for (auto _ : state) benchmark::DoNotOptimize(longest_mono(s, gaps));
  state.counters["bits"] = static_cast<double>(s.size());
}
BENCHMARK(BM_LongestMonoKappa)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

static void BM_Psi(benchmark::State& state) {
  const Coloring s = construct_kappa(6);
  const GapSet gaps;
  for (auto _ : state) benchmark::DoNotOptimize(psi(s, gaps, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_Psi)->Arg(0)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_DeltaExact(benchmark::State& state) {
  const GapSet gaps;
  for (auto _ : state) benchmark::DoNotOptimize(delta_exact(gaps, static_cast<std::uint64_t>(state.range(0)), 2));
}
BENCHMARK(BM_DeltaExact)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
