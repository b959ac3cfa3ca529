// Microbenchmarks for the solver's hot paths: incremental swap probes,
// full-cost recomputation, greedy placement, and whole engine iterations.

#include <benchmark/benchmark.h>

#include <memory>
#include <numeric>
#include <vector>

#include "adsearch/engine.hpp"
#include "adsearch/problems/all_interval.hpp"
#include "adsearch/problems/magic_square.hpp"
#include "adsearch/problems/partition.hpp"
#include "adsearch/problems/perfect_square.hpp"
#include "adsearch/rng.hpp"

namespace {

adsearch::Configuration random_config(const adsearch::Problem& model, adsearch::Rng& rng) {
  adsearch::Configuration config = model.base_values();
  adsearch::shuffle(config, rng);
  return config;
}

void swap_probe_loop(benchmark::State& state, const adsearch::Problem& model) {
  adsearch::Rng rng(42);
  const auto evaluator = model.make_evaluator();
  evaluator->bind(random_config(model, rng));
  const int n = model.variable_count();
  for (auto _ : state) {
    const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    if (j == i) j = (j + 1) % n;
    benchmark::DoNotOptimize(evaluator->swap_cost(i, j));
  }
}

void full_cost_loop(benchmark::State& state, const adsearch::Problem& model) {
  adsearch::Rng rng(42);
  const adsearch::Configuration config = random_config(model, rng);
  for (auto _ : state) benchmark::DoNotOptimize(model.cost(config));
}

void BM_AllIntervalSwapProbe(benchmark::State& state) {
  const adsearch::AllIntervalProblem model(static_cast<int>(state.range(0)));
  swap_probe_loop(state, model);
}
BENCHMARK(BM_AllIntervalSwapProbe)->Arg(50)->Arg(100)->Arg(200);

void BM_PartitionSwapProbe(benchmark::State& state) {
  const adsearch::PartitionProblem model(static_cast<int>(state.range(0)));
  swap_probe_loop(state, model);
}
BENCHMARK(BM_PartitionSwapProbe)->Arg(128)->Arg(512)->Arg(2048);

void BM_MagicSquareSwapProbe(benchmark::State& state) {
  const adsearch::MagicSquareProblem model(static_cast<int>(state.range(0)));
  swap_probe_loop(state, model);
}
BENCHMARK(BM_MagicSquareSwapProbe)->Arg(10)->Arg(20)->Arg(40);

void BM_AllIntervalFullCost(benchmark::State& state) {
  const adsearch::AllIntervalProblem model(static_cast<int>(state.range(0)));
  full_cost_loop(state, model);
}
BENCHMARK(BM_AllIntervalFullCost)->Arg(100);

void BM_MagicSquareFullCost(benchmark::State& state) {
  const adsearch::MagicSquareProblem model(static_cast<int>(state.range(0)));
  full_cost_loop(state, model);
}
BENCHMARK(BM_MagicSquareFullCost)->Arg(20);

// Greedy placement of a full order: the dominating cost of one perfect-square
// evaluation.
void BM_PerfectSquarePlacement(benchmark::State& state) {
  const adsearch::PerfectSquareProblem model =
      adsearch::bundled_perfect_square(static_cast<int>(state.range(0)));
  full_cost_loop(state, model);
}
BENCHMARK(BM_PerfectSquarePlacement)->Arg(1)->Arg(5);

// Whole engine: fixed iteration budget with restarts disabled, so the metric
// is time per search iteration.
void BM_EngineIterations(benchmark::State& state) {
  const adsearch::MagicSquareProblem model(10);
  adsearch::SolverParams params = model.default_params();
  params.max_iterations = 2000;
  params.max_restarts = 0;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const adsearch::Outcome out =
        adsearch::solve_sequential(model, params, adsearch::Rng(++seed));
    benchmark::DoNotOptimize(out.cost);
  }
  state.SetItemsProcessed(state.iterations() * params.max_iterations);
}
BENCHMARK(BM_EngineIterations)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
