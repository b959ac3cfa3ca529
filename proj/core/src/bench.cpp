#include "adsearch/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "adsearch/params.hpp"

namespace adsearch {

namespace {

// Sorted distinct worker counts; the sweep and all tables use this order.
std::vector<int> normalized_worker_counts(const BenchmarkSpec& spec) {
  std::vector<int> counts = spec.worker_counts;
  std::sort(counts.begin(), counts.end());
  counts.erase(std::unique(counts.begin(), counts.end()), counts.end());
  return counts;
}

nlohmann::json spec_echo(const BenchmarkSpec& spec) {
  nlohmann::json echo{
      {"problem", spec.problem_label},
      {"params",
       {{"tabu_tenure", spec.params.tabu_tenure},
        {"reset_limit", spec.params.reset_limit},
        {"reset_percentage", spec.params.reset_percentage},
        {"max_iterations", spec.params.max_iterations},
        {"max_restarts", spec.params.max_restarts}}},
      {"worker_counts", spec.worker_counts},
      {"runs", spec.runs},
      {"master_seed", spec.master_seed},
      {"start_mode", to_string(spec.start_mode)},
  };
  if (spec.wall_clock_limit)
    echo["wall_clock_limit_ms"] = spec.wall_clock_limit->count();
  else
    echo["wall_clock_limit_ms"] = nullptr;
  return echo;
}

}  // namespace

void validate_spec(const BenchmarkSpec& spec) {
  if (spec.problem == nullptr) throw std::invalid_argument("benchmark spec has no problem");
  if (spec.runs < 3)
    throw TooFewSamples("benchmark needs runs >= 3 for trimmed statistics, got " +
                        std::to_string(spec.runs));
  if (spec.worker_counts.empty() ||
      std::find(spec.worker_counts.begin(), spec.worker_counts.end(), 1) ==
          spec.worker_counts.end())
    throw MissingBaseline("worker counts must include 1 (the speedup baseline)");
  for (const int k : spec.worker_counts)
    if (k < 1) throw std::invalid_argument("worker counts must be positive");
  validate_params(spec.params, spec.problem->variable_count());
}

SuiteReport run_suite(const BenchmarkSpec& spec) {
  validate_spec(spec);
  SuiteReport report;

  for (const int workers : normalized_worker_counts(spec)) {
    std::vector<double> samples;
    samples.reserve(static_cast<std::size_t>(spec.runs));
    int solved = 0;

    for (int run = 0; run < spec.runs; ++run) {
      ParallelConfig pconfig;
      pconfig.workers = workers;
      pconfig.start_mode = spec.start_mode;
      pconfig.master_seed = spec.master_seed + static_cast<std::uint64_t>(run);
      pconfig.wall_clock_limit = spec.wall_clock_limit;

      const ParallelOutcome outcome = solve_parallel(*spec.problem, spec.params, pconfig);

      RunRecord record;
      record.run = run;
      record.workers = workers;
      record.seed = pconfig.master_seed;
      record.status = outcome.status;
      record.elapsed_ms = outcome.elapsed_ms;
      record.cost = outcome.cost;
      record.winner = outcome.winner;
      if (outcome.winner) {
        record.iterations_total =
            outcome.per_worker[static_cast<std::size_t>(*outcome.winner)].iterations_total;
      } else {
        for (const WorkerReport& w : outcome.per_worker)
          record.iterations_total += w.iterations_total;
      }

      if (outcome.status == Status::Solved) {
        if (!spec.problem->validate(outcome.config))
          throw std::logic_error("solved run failed re-validation");
        ++solved;
      }
      samples.push_back(outcome.elapsed_ms);
      report.runs.push_back(std::move(record));
    }

    report.stats_by_workers.emplace(workers, summarize(samples));
    report.solve_rate_by_workers.emplace(workers,
                                         static_cast<double>(solved) / spec.runs);
  }

  report.table = speedup_table(report.stats_by_workers);

  if (!spec.out_dir.empty()) {
    const std::filesystem::path dir(spec.out_dir);
    std::filesystem::create_directories(dir);
    const auto write = [](const std::filesystem::path& path, const std::string& text) {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path.string());
      out << text;
      if (!out.flush()) throw std::runtime_error("cannot write " + path.string());
    };
    report.csv_path = (dir / "summary.csv").string();
    report.json_path = (dir / "runs.json").string();
    write(report.csv_path, suite_csv(spec, report));
    write(report.json_path, suite_json(spec, report));
  }
  return report;
}

std::string suite_csv(const BenchmarkSpec& spec, const SuiteReport& report) {
  std::ostringstream out;
  out << "workers,runs,solve_rate,trimmed_mean_ms,worst_ms,best_ms,stddev_ms,speedup,"
         "worst_case_speedup\n";
  char line[256];
  for (const SpeedupRow& row : report.table) {
    std::snprintf(line, sizeof line, "%d,%d,%.4f,%.3f,%.3f,%.3f,%.3f,%.4f,%.4f\n", row.workers,
                  spec.runs, report.solve_rate_by_workers.at(row.workers),
                  row.stats.trimmed_mean, row.stats.worst, row.stats.best, row.stats.stddev,
                  row.stats.speedup_vs_baseline, row.worst_case_speedup);
    out << line;
  }
  return out.str();
}

std::string suite_json(const BenchmarkSpec& spec, const SuiteReport& report) {
  nlohmann::json doc;
  doc["spec"] = spec_echo(spec);
  doc["runs"] = nlohmann::json::array();
  for (const RunRecord& r : report.runs) {
    nlohmann::json entry{
        {"run", r.run},
        {"workers", r.workers},
        {"seed", r.seed},
        {"status", to_string(r.status)},
        {"elapsed_ms", r.elapsed_ms},
        {"cost", r.cost},
        {"iterations_total", r.iterations_total},
    };
    if (r.winner)
      entry["winner"] = *r.winner;
    else
      entry["winner"] = nullptr;
    doc["runs"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

void ParamOverrides::apply(SolverParams& params) const {
  if (tabu_tenure) params.tabu_tenure = *tabu_tenure;
  if (reset_limit) params.reset_limit = *reset_limit;
  if (reset_percentage) params.reset_percentage = *reset_percentage;
  if (max_iterations) params.max_iterations = *max_iterations;
  if (max_restarts) params.max_restarts = *max_restarts;
}

void ParamOverrides::apply(PerfectSquareWeights& weights) const {
  if (w_unplaced_count) weights.unplaced_count = *w_unplaced_count;
  if (w_largest_unplaced) weights.largest_unplaced = *w_largest_unplaced;
  if (w_slot_height_sum) weights.slot_height_sum = *w_slot_height_sum;
  if (w_slot_height_max) weights.slot_height_max = *w_slot_height_max;
  if (w_slot_width_sum) weights.slot_width_sum = *w_slot_width_sum;
}

namespace {

long long parse_int(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw InvalidParams("bad integer for " + key + ": '" + text + "'");
  }
  if (used != text.size()) throw InvalidParams("bad integer for " + key + ": '" + text + "'");
  return value;
}

double parse_real(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidParams("bad number for " + key + ": '" + text + "'");
  }
  if (used != text.size()) throw InvalidParams("bad number for " + key + ": '" + text + "'");
  return value;
}

std::string trimmed(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

ParamOverrides parse_param_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParams("cannot open parameter file: " + path);

  ParamOverrides overrides;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trimmed(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw InvalidParams("expected key=value on line " + std::to_string(line_no) + " of " + path);
    const std::string key = trimmed(text.substr(0, eq));
    const std::string value = trimmed(text.substr(eq + 1));

    if (key == "tabu_tenure")
      overrides.tabu_tenure = static_cast<int>(parse_int(key, value));
    else if (key == "reset_limit")
      overrides.reset_limit = static_cast<int>(parse_int(key, value));
    else if (key == "reset_percentage")
      overrides.reset_percentage = parse_real(key, value);
    else if (key == "max_iterations")
      overrides.max_iterations = parse_int(key, value);
    else if (key == "max_restarts")
      overrides.max_restarts = static_cast<int>(parse_int(key, value));
    else if (key == "w_unplaced_count")
      overrides.w_unplaced_count = parse_int(key, value);
    else if (key == "w_largest_unplaced")
      overrides.w_largest_unplaced = parse_int(key, value);
    else if (key == "w_slot_height_sum")
      overrides.w_slot_height_sum = parse_int(key, value);
    else if (key == "w_slot_height_max")
      overrides.w_slot_height_max = parse_int(key, value);
    else if (key == "w_slot_width_sum")
      overrides.w_slot_width_sum = parse_int(key, value);
    else
      throw InvalidParams("unknown parameter '" + key + "' on line " + std::to_string(line_no) +
                          " of " + path);
  }
  return overrides;
}

}  // namespace adsearch
