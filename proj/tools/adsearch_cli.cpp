// Command-line driver: single solves and benchmark sweeps over the bundled
// permutation problems.
//
//   adsearch solve --problem all-interval --size 12 --seed 7
//   adsearch bench --problem partition --size 512 --workers 1,8 --runs 30 --out results/
//
// Exit codes: 0 success; 2 invalid arguments/spec; 3 instance load failure;
// 1 any other runtime error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adsearch/bench.hpp"
#include "adsearch/engine.hpp"
#include "adsearch/parallel.hpp"
#include "adsearch/problems/factory.hpp"

namespace {

struct CommonArgs {
  std::string problem;
  int size = 0;
  std::string instance;
  std::uint64_t seed = 0;
  std::string params_file;
  long long timeout_ms = 0;  // 0: no limit
  std::string start_mode = "random";
};

void add_common_options(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("--problem", args.problem,
                 "Problem family: all-interval | partition | magic-square | perfect-square")
      ->required();
  cmd.add_option("--size", args.size,
                 "Problem size n (board side for magic-square; bundled instance id 1..5 for "
                 "perfect-square)");
  cmd.add_option("--instance", args.instance,
                 "perfect-square instance: bundled id 1..5 or a file path");
  cmd.add_option("--seed", args.seed, "Master seed for the run (default 0)");
  cmd.add_option("--params", args.params_file, "Parameter file with key=value lines");
  cmd.add_option("--timeout", args.timeout_ms, "Wall-clock limit in milliseconds (0: none)");
  cmd.add_option("--start-mode", args.start_mode, "Worker start mode")
      ->check(CLI::IsMember({"random", "shared"}));
}

std::string problem_label(const CommonArgs& args) {
  if (args.problem == "perfect-square") {
    const std::string which = !args.instance.empty() ? args.instance : std::to_string(args.size);
    return args.problem + " instance=" + which;
  }
  return args.problem + " n=" + std::to_string(args.size);
}

adsearch::StartMode parse_start_mode(const std::string& text) {
  return text == "shared" ? adsearch::StartMode::SharedInitial
                          : adsearch::StartMode::IndependentRandom;
}

struct Resolved {
  std::unique_ptr<adsearch::Problem> model;
  adsearch::SolverParams params;
  std::optional<std::chrono::milliseconds> wall_clock_limit;
};

Resolved resolve(const CommonArgs& args) {
  adsearch::ParamOverrides overrides;
  if (!args.params_file.empty()) overrides = adsearch::parse_param_file(args.params_file);

  adsearch::ProblemOptions options;
  options.problem = args.problem;
  options.size = args.size;
  options.instance = args.instance;
  overrides.apply(options.weights);

  Resolved r;
  r.model = adsearch::make_problem(options);
  r.params = r.model->default_params();
  overrides.apply(r.params);
  r.params.rng_seed = args.seed;
  if (args.timeout_ms > 0) r.wall_clock_limit = std::chrono::milliseconds(args.timeout_ms);
  return r;
}

int run_solve(const CommonArgs& args, int workers) {
  Resolved r = resolve(args);

  adsearch::ParallelConfig pconfig;
  pconfig.workers = workers;
  pconfig.start_mode = parse_start_mode(args.start_mode);
  pconfig.master_seed = args.seed;
  pconfig.wall_clock_limit = r.wall_clock_limit;

  const adsearch::ParallelOutcome outcome =
      adsearch::solve_parallel(*r.model, r.params, pconfig);

  long long iterations = 0;
  int restarts = 0;
  adsearch::Cost initial_cost = 0;
  if (outcome.winner) {
    const auto& w = outcome.per_worker[static_cast<std::size_t>(*outcome.winner)];
    iterations = w.iterations_total;
    restarts = w.restarts_used;
  } else {
    for (const auto& w : outcome.per_worker) {
      iterations += w.iterations_total;
      restarts = std::max(restarts, w.restarts_used);
    }
  }
  if (!outcome.per_worker.empty()) {
    initial_cost = outcome.per_worker.front().initial_cost;
    for (const auto& w : outcome.per_worker)
      initial_cost = std::min(initial_cost, w.initial_cost);
  }

  std::printf("problem: %s\n", problem_label(args).c_str());
  std::printf("status: %s\n", adsearch::to_string(outcome.status));
  std::printf("cost: %lld\n", static_cast<long long>(outcome.cost));
  std::printf("iterations_total: %lld\n", iterations);
  std::printf("restarts_used: %d\n", restarts);
  std::printf("winner: %s\n",
              outcome.winner ? std::to_string(*outcome.winner).c_str() : "none");
  std::printf("initial_cost: %lld\n", static_cast<long long>(initial_cost));
  std::printf("elapsed_ms: %.3f\n", outcome.elapsed_ms);
  std::printf("configuration:");
  for (const int v : outcome.config) std::printf(" %d", v);
  std::printf("\n");
  return 0;
}

int run_bench(const CommonArgs& args, const std::vector<int>& worker_counts, int runs,
              const std::string& out_dir) {
  Resolved r = resolve(args);

  adsearch::BenchmarkSpec spec;
  spec.problem = r.model.get();
  spec.problem_label = problem_label(args);
  spec.params = r.params;
  spec.worker_counts = worker_counts;
  spec.runs = runs;
  spec.master_seed = args.seed;
  spec.start_mode = parse_start_mode(args.start_mode);
  spec.wall_clock_limit = r.wall_clock_limit;
  spec.out_dir = out_dir;

  const adsearch::SuiteReport report = adsearch::run_suite(spec);

  std::printf("problem: %s  runs=%d  seed=%llu  start-mode=%s\n", spec.problem_label.c_str(),
              runs, static_cast<unsigned long long>(args.seed), args.start_mode.c_str());
  std::printf("%8s %6s %10s %14s %12s %12s %12s %9s %10s\n", "workers", "runs", "solve_rate",
              "trimmed_ms", "worst_ms", "best_ms", "stddev_ms", "speedup", "worst_spd");
  for (const adsearch::SpeedupRow& row : report.table) {
    std::printf("%8d %6d %10.4f %14.3f %12.3f %12.3f %12.3f %9.4f %10.4f\n", row.workers, runs,
                report.solve_rate_by_workers.at(row.workers), row.stats.trimmed_mean,
                row.stats.worst, row.stats.best, row.stats.stddev,
                row.stats.speedup_vs_baseline, row.worst_case_speedup);
  }
  if (!report.csv_path.empty()) {
    std::printf("wrote %s\n", report.csv_path.c_str());
    std::printf("wrote %s\n", report.json_path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive local search over permutation problems"};
  app.require_subcommand(1);

  CommonArgs solve_args;
  int solve_workers = 1;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Run one search and print the result");
  add_common_options(*solve_cmd, solve_args);
  solve_cmd->add_option("--workers", solve_workers, "Parallel workers (default 1)")
      ->check(CLI::PositiveNumber);

  CommonArgs bench_args;
  std::vector<int> bench_workers{1};
  int bench_runs = 10;
  std::string bench_out;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark sweep and print the table");
  add_common_options(*bench_cmd, bench_args);
  bench_cmd->add_option("--workers", bench_workers, "Comma-separated worker counts (default 1)")
      ->delimiter(',');
  bench_cmd->add_option("--runs", bench_runs, "Repetitions per worker count (default 10)");
  bench_cmd->add_option("--out", bench_out, "Directory for summary.csv and runs.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit cleanly; parse errors are invalid specs
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args, solve_workers);
    return run_bench(bench_args, bench_workers, bench_runs, bench_out);
  } catch (const adsearch::InvalidInstance& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const adsearch::InvalidParams& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const adsearch::TooFewSamples& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const adsearch::MissingBaseline& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
