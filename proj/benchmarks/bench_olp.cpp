#include <benchmark/benchmark.h>

#include "olp/lp.hpp"
#include "olp/rng.hpp"
#include "olp/simulation.hpp"
#include "olpbench/presets.hpp"

using namespace olp;

static void BM_SolveFluid_Multi10x2(benchmark::State& state) {
  const Instance ins = bench::multi_10x2(2500);
  const Vec b = ins.initial_inventory();
  const Vec d = {302.5, 2197.5};
  for (auto _ : state) benchmark::DoNotOptimize(solve_fluid(ins, b, d).objective);
}
BENCHMARK(BM_SolveFluid_Multi10x2);

static void BM_SolveFluid_10x50(benchmark::State& state) {
  const Instance ins = bench::fig6_10x50(10000);
  const Vec b = ins.initial_inventory();
  Vec d(ins.num_types());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = 10000.0 * ins.probabilities[j];
  for (auto _ : state) benchmark::DoNotOptimize(solve_fluid(ins, b, d).objective);
}
BENCHMARK(BM_SolveFluid_10x50);

static void BM_MaxCoordProbe(benchmark::State& state) {
  const Instance ins = bench::multi_10x2(2500);
  const Vec b = ins.initial_inventory();
  const Vec d = {302.5, 2197.5};
  for (auto _ : state) benchmark::DoNotOptimize(max_coord_over_optima(ins, b, d, 1));
}
BENCHMARK(BM_MaxCoordProbe);

static void BM_SamplePath(benchmark::State& state) {
  const Instance ins = bench::multi_10x2(static_cast<long long>(state.range(0)));
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sample_path(ins, seed++).counts[0]);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplePath)->Arg(2500)->Arg(20000);

static void BM_RunPolicy_Air(benchmark::State& state) {
  const Instance ins = bench::multi_10x2(static_cast<long long>(state.range(0)));
  const PolicySpec spec{.kind = PolicyKind::Air};
  const auto sched = make_schedule(spec, ins.horizon);
  const SamplePath path = sample_path(ins, 7);
  for (auto _ : state) benchmark::DoNotOptimize(run_policy(spec, ins, &*sched, path, 1).revenue);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunPolicy_Air)->Arg(2500)->Arg(20000);

static void BM_RunPolicy_Sfa(benchmark::State& state) {
  const Instance ins = bench::multi_10x2(static_cast<long long>(state.range(0)));
  const SamplePath path = sample_path(ins, 7);
  const PolicySpec spec{.kind = PolicyKind::Sfa};
  for (auto _ : state) benchmark::DoNotOptimize(run_policy(spec, ins, nullptr, path, 1).revenue);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunPolicy_Sfa)->Arg(2500)->Arg(20000);

static void BM_RunPolicy_Afr(benchmark::State& state) {
  const Instance ins = bench::multi_10x2(2500);
  const SamplePath path = sample_path(ins, 7);
  const PolicySpec spec{.kind = PolicyKind::Afr};
  for (auto _ : state) benchmark::DoNotOptimize(run_policy(spec, ins, nullptr, path, 1).revenue);
  state.SetItemsProcessed(state.iterations() * 2500);
}
BENCHMARK(BM_RunPolicy_Afr);

static void BM_HindsightValue(benchmark::State& state) {
  const Instance ins = bench::multi_10x2(20000);
  const SamplePath path = sample_path(ins, 7);
  for (auto _ : state) benchmark::DoNotOptimize(hindsight_value(ins, path));
}
BENCHMARK(BM_HindsightValue);

BENCHMARK_MAIN();
