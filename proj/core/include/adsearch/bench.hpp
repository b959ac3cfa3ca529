#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adsearch/engine.hpp"
#include "adsearch/parallel.hpp"
#include "adsearch/problem.hpp"
#include "adsearch/problems/perfect_square.hpp"
#include "adsearch/stats.hpp"

namespace adsearch {

struct BenchmarkSpec {
  const Problem* problem = nullptr;
  std::string problem_label;          // e.g. "all-interval n=100"
  SolverParams params;                // fully resolved solver parameters
  std::vector<int> worker_counts;    // must include 1 (speedup baseline)
  int runs = 0;                       // >= 3 (trimmed statistics)
  std::uint64_t master_seed = 0;
  StartMode start_mode = StartMode::IndependentRandom;
  std::optional<std::chrono::milliseconds> wall_clock_limit;
  std::string out_dir;                // empty: no files written
};

struct RunRecord {
  int run = 0;
  int workers = 0;
  std::uint64_t seed = 0;
  Status status = Status::Exhausted;
  double elapsed_ms = 0.0;
  Cost cost = 0;
  std::optional<int> winner;
  long long iterations_total = 0;  // winner's when solved, else sum over workers
};

struct SuiteReport {
  std::vector<RunRecord> runs;
  std::map<int, StatsSummary> stats_by_workers;
  std::map<int, double> solve_rate_by_workers;
  std::vector<SpeedupRow> table;
  std::string csv_path;   // empty when not written
  std::string json_path;  // empty when not written
};

// Rejects malformed specs: runs < 3 (TooFewSamples), missing 1-worker
// baseline (MissingBaseline), null problem / non-positive worker counts
// (std::invalid_argument).
void validate_spec(const BenchmarkSpec& spec);

// Execute the sweep: for each worker count, `runs` repetitions where run r
// uses master seed spec.master_seed + r (identical across worker counts).
// Solved runs are re-validated before being counted. Writes summary.csv and
// runs.json under spec.out_dir when it is non-empty.
SuiteReport run_suite(const BenchmarkSpec& spec);

// CSV rendering of a computed report (header + one row per worker count).
std::string suite_csv(const BenchmarkSpec& spec, const SuiteReport& report);

// JSON rendering: top-level spec echo plus per-run records.
std::string suite_json(const BenchmarkSpec& spec, const SuiteReport& report);

// Optional overrides parsed from a plain-text key=value parameter file.
struct ParamOverrides {
  std::optional<int> tabu_tenure;
  std::optional<int> reset_limit;
  std::optional<double> reset_percentage;
  std::optional<long long> max_iterations;
  std::optional<int> max_restarts;
  std::optional<long long> w_unplaced_count;
  std::optional<long long> w_largest_unplaced;
  std::optional<long long> w_slot_height_sum;
  std::optional<long long> w_slot_height_max;
  std::optional<long long> w_slot_width_sum;

  void apply(SolverParams& params) const;
  void apply(PerfectSquareWeights& weights) const;
};

// Parse `key=value` lines; blank lines and lines starting with '#' are
// ignored. Unknown keys or unparsable values raise InvalidParams.
ParamOverrides parse_param_file(const std::string& path);

}  // namespace adsearch
