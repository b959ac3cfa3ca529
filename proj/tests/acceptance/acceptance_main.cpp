// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. Covers solver correctness oracles, brute-force
// equivalence, desk-scale hard instances, parallel speedup direction,
// variance reduction, the shared-initial start mode, CLI determinism, the
// anytime contract, and the statistics kernel.
//
// Usage: acceptance --cli <path-to-adsearch-binary> [--only 1,2,...]

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adsearch/engine.hpp"
#include "adsearch/parallel.hpp"
#include "adsearch/problems/all_interval.hpp"
#include "adsearch/problems/factory.hpp"
#include "adsearch/problems/magic_square.hpp"
#include "adsearch/problems/partition.hpp"
#include "adsearch/problems/perfect_square.hpp"
#include "adsearch/rng.hpp"
#include "adsearch/stats.hpp"

using adsearch::Configuration;
using adsearch::Cost;
using adsearch::Outcome;
using adsearch::ParallelConfig;
using adsearch::ParallelOutcome;
using adsearch::Rng;
using adsearch::SolverParams;
using adsearch::Status;

namespace {

std::string g_cli_path;

struct Check {
  bool ok = false;
  std::string detail;
};

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

void progress(const char* fmt, ...) {
  std::va_list args;
  va_start(args, fmt);
  std::printf("    ");
  std::vprintf(fmt, args);
  std::printf("\n");
  std::fflush(stdout);
  va_end(args);
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// ------------------------------------------------------------------ CLI driving

struct CliResult {
  int exit_code = -1;
  std::map<std::string, std::string> fields;  // "status" -> "solved", ...
  std::string raw;
};

CliResult run_cli(const std::string& args) {
  CliResult result;
  const std::string cmd = "\"" + g_cli_path + "\" " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) {
    result.raw = "popen failed";
    return result;
  }
  char buffer[65536];
  std::string text;
  while (std::fgets(buffer, sizeof buffer, pipe)) text += buffer;
  const int rc = ::pclose(pipe);
  result.exit_code = (rc >= 0 && WIFEXITED(rc)) ? WEXITSTATUS(rc) : -1;
  result.raw = text;

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    while (!value.empty() && value.front() == ' ') value.erase(value.begin());
    result.fields[key] = value;
  }
  return result;
}

Configuration parse_configuration(const std::string& text) {
  Configuration config;
  std::istringstream in(text);
  int v = 0;
  while (in >> v) config.push_back(v);
  return config;
}

// ------------------------------------------------------- timed parallel solving

struct TimedRun {
  bool solved = false;
  double elapsed_ms = 0.0;
};

TimedRun timed_solve(const adsearch::Problem& model, const SolverParams& params, int workers,
                     std::uint64_t master_seed, adsearch::StartMode mode,
                     std::optional<std::chrono::milliseconds> cap) {
  ParallelConfig config;
  config.workers = workers;
  config.master_seed = master_seed;
  config.start_mode = mode;
  config.wall_clock_limit = cap;
  const ParallelOutcome out = adsearch::solve_parallel(model, params, config);
  return TimedRun{out.status == Status::Solved, out.elapsed_ms};
}

// ------------------------------------------------------------------ criterion 1

Check criterion1() {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    {
      const adsearch::PartitionProblem p(8);
      const auto t0 = std::chrono::steady_clock::now();
      const Outcome out = adsearch::solve_sequential(p, p.default_params(), Rng(seed));
      const double ms = elapsed_ms_since(t0);
      if (out.status != Status::Solved || ms >= 1000.0)
        return {false, "partition n=8 seed " + std::to_string(seed) + " not solved in 1 s"};
      if (!p.validate(out.config))
        return {false, "partition n=8 seed " + std::to_string(seed) + " failed validation"};
      long long sum = 0, sq = 0;
      for (int i = 0; i < 4; ++i) {
        sum += out.config[static_cast<std::size_t>(i)];
        sq += static_cast<long long>(out.config[static_cast<std::size_t>(i)]) *
              out.config[static_cast<std::size_t>(i)];
      }
      if (sum != 18 || sq != 102)
        return {false, "partition n=8 seed " + std::to_string(seed) + " sums mismatch"};
    }
    {
      const adsearch::MagicSquareProblem p(3);
      const auto t0 = std::chrono::steady_clock::now();
      const Outcome out = adsearch::solve_sequential(p, p.default_params(), Rng(seed));
      const double ms = elapsed_ms_since(t0);
      if (out.status != Status::Solved || ms >= 1000.0)
        return {false, "magic n=3 seed " + std::to_string(seed) + " not solved in 1 s"};
      if (!p.validate(out.config))
        return {false, "magic n=3 seed " + std::to_string(seed) + " failed validation"};
      for (int r = 0; r < 3; ++r) {
        Cost row = 0, col = 0;
        for (int c = 0; c < 3; ++c) {
          row += out.config[static_cast<std::size_t>(r * 3 + c)];
          col += out.config[static_cast<std::size_t>(c * 3 + r)];
        }
        if (row != 15 || col != 15)
          return {false, "magic n=3 seed " + std::to_string(seed) + " line sums not 15"};
      }
      const Cost d1 = out.config[0] + out.config[4] + out.config[8];
      const Cost d2 = out.config[2] + out.config[4] + out.config[6];
      if (d1 != 15 || d2 != 15)
        return {false, "magic n=3 seed " + std::to_string(seed) + " diagonal sums not 15"};
    }
    {
      const adsearch::AllIntervalProblem p(12);
      const auto t0 = std::chrono::steady_clock::now();
      const Outcome out = adsearch::solve_sequential(p, p.default_params(), Rng(seed));
      const double ms = elapsed_ms_since(t0);
      if (out.status != Status::Solved || ms >= 5000.0)
        return {false, "all-interval n=12 seed " + std::to_string(seed) + " not solved in 5 s"};
      if (!p.validate(out.config))
        return {false, "all-interval n=12 seed " + std::to_string(seed) + " failed validation"};
      std::set<int> diffs;
      for (int i = 0; i + 1 < 12; ++i)
        diffs.insert(std::abs(out.config[static_cast<std::size_t>(i)] -
                              out.config[static_cast<std::size_t>(i + 1)]));
      if (diffs.size() != 11 || *diffs.begin() != 1 || *diffs.rbegin() != 11)
        return {false,
                "all-interval n=12 seed " + std::to_string(seed) + " differences not 1..11"};
    }
  }
  return {true, "30/30 solves validated across 10 seeds"};
}

// ------------------------------------------------------------------ criterion 2

bool ais_oracle(const Configuration& config) {
  std::set<int> diffs;
  for (std::size_t i = 0; i + 1 < config.size(); ++i)
    diffs.insert(std::abs(config[i] - config[i + 1]));
  return diffs.size() == config.size() - 1 && *diffs.begin() == 1 &&
         *diffs.rbegin() == static_cast<int>(config.size()) - 1;
}

bool magic_oracle(const Configuration& config, int n) {
  const Cost magic = static_cast<Cost>(n) * (n * n + 1) / 2;
  for (int r = 0; r < n; ++r) {
    Cost s = 0;
    for (int c = 0; c < n; ++c) s += config[static_cast<std::size_t>(r * n + c)];
    if (s != magic) return false;
  }
  for (int c = 0; c < n; ++c) {
    Cost s = 0;
    for (int r = 0; r < n; ++r) s += config[static_cast<std::size_t>(r * n + c)];
    if (s != magic) return false;
  }
  Cost d1 = 0, d2 = 0;
  for (int r = 0; r < n; ++r) {
    d1 += config[static_cast<std::size_t>(r * n + r)];
    d2 += config[static_cast<std::size_t>(r * n + (n - 1 - r))];
  }
  return d1 == magic && d2 == magic;
}

Check criterion2() {
  const auto t0 = std::chrono::steady_clock::now();

  for (int n = 2; n <= 7; ++n) {
    const adsearch::AllIntervalProblem p(n);
    Configuration config(static_cast<std::size_t>(n));
    std::iota(config.begin(), config.end(), 0);
    long long solutions = 0;
    do {
      const bool by_cost = p.cost(config) == 0;
      if (by_cost != ais_oracle(config))
        return {false, "all-interval n=" + std::to_string(n) + " solution sets differ"};
      if (by_cost) ++solutions;
    } while (std::next_permutation(config.begin(), config.end()));
    if (solutions == 0)
      return {false, "all-interval n=" + std::to_string(n) + " found no solutions"};
  }

  for (int n = 1; n <= 3; ++n) {
    const adsearch::MagicSquareProblem p(n);
    Configuration config(static_cast<std::size_t>(n) * n);
    std::iota(config.begin(), config.end(), 1);
    long long solutions = 0;
    do {
      const bool by_cost = p.cost(config) == 0;
      if (by_cost != magic_oracle(config, n))
        return {false, "magic n=" + std::to_string(n) + " solution sets differ"};
      if (by_cost) ++solutions;
    } while (std::next_permutation(config.begin(), config.end()));
    const long long expected = n == 1 ? 1 : (n == 2 ? 0 : 8);
    if (solutions != expected)
      return {false, "magic n=" + std::to_string(n) + " solution count " +
                         std::to_string(solutions) + " != " + std::to_string(expected)};
  }

  const double ms = elapsed_ms_since(t0);
  if (ms >= 60000.0) return {false, "exhaustive comparison exceeded 1 minute"};
  char buf[128];
  std::snprintf(buf, sizeof buf, "exhaustive sets coincide in %.1f s", ms / 1000.0);
  return {true, buf};
}

// ------------------------------------------------------------------ criterion 3

Check criterion3() {
  struct Case {
    const char* label;
    std::function<std::unique_ptr<adsearch::Problem>()> make;
    double budget_ms;
    std::uint64_t seed_base;
  };
  const std::vector<Case> cases{
      {"partition n=512", [] { return std::make_unique<adsearch::PartitionProblem>(512); },
       60000.0, 0xC3100},
      {"magic-square n=20", [] { return std::make_unique<adsearch::MagicSquareProblem>(20); },
       120000.0, 0xC3200},
      {"all-interval n=100", [] { return std::make_unique<adsearch::AllIntervalProblem>(100); },
       120000.0, 0xC3300},
      {"perfect-square instance 1",
       [] {
         return std::make_unique<adsearch::PerfectSquareProblem>(
             adsearch::bundled_perfect_square(1));
       },
       300000.0, 0xC3400},
  };

  std::string summary;
  bool all_ok = true;
  for (const Case& c : cases) {
    const auto model = c.make();
    const SolverParams params = model->default_params();
    std::vector<double> samples;
    int unsolved = 0;
    for (int run = 0; run < 10; ++run) {
      const TimedRun r = timed_solve(
          *model, params, 8, c.seed_base + static_cast<std::uint64_t>(run),
          adsearch::StartMode::IndependentRandom,
          std::chrono::milliseconds(static_cast<long long>(c.budget_ms)));
      samples.push_back(r.elapsed_ms);
      if (!r.solved) ++unsolved;
      progress("[c3] %s run %d: %.0f ms %s", c.label, run, r.elapsed_ms,
               r.solved ? "solved" : "NOT SOLVED");
      if (unsolved >= 5) break;  // median can no longer beat the budget
    }
    while (samples.size() < 10) samples.push_back(c.budget_ms);  // aborted runs
    const double med = median(samples);
    const bool ok = unsolved < 5 && med < c.budget_ms;
    char buf[176];
    std::snprintf(buf, sizeof buf, "%s%s median %.0f ms (budget %.0f ms, %d/10 unsolved)",
                  ok ? "" : "MISSED: ", c.label, med, c.budget_ms, unsolved);
    progress("[c3] %s", buf);
    all_ok = all_ok && ok;
    if (!summary.empty()) summary += "; ";
    summary += buf;
  }
  return {all_ok, summary};
}

// ------------------------------------------------- criteria 4-6 shared experiment

struct Arm {
  std::vector<double> samples;
  int solved = 0;
};

struct Experiment {
  Arm one, eight;
};

// Safety cap so a pathological configuration cannot hang the suite; censoring
// at the cap only makes the speedup and variance gates harder to pass.
constexpr std::chrono::milliseconds kExperimentCap{60000};

Arm run_arm(const adsearch::Problem& model, const SolverParams& params, int workers,
            std::uint64_t seed_base, adsearch::StartMode mode, const char* tag) {
  Arm arm;
  for (int run = 0; run < 30; ++run) {
    const TimedRun r = timed_solve(model, params, workers,
                                   seed_base + static_cast<std::uint64_t>(run), mode,
                                   kExperimentCap);
    arm.samples.push_back(r.elapsed_ms);
    if (r.solved) ++arm.solved;
    if (run % 10 == 9)
      progress("[%s] workers=%d runs %d..%d done (last %.0f ms)", tag, workers, run - 9, run,
               r.elapsed_ms);
    // Early censor: five opening timeouts mean the arm is saturated at the
    // cap; padding the remainder with the cap leaves the trimmed mean,
    // stddev, worst case, and solve count of an all-censored arm unchanged.
    if (run == 4 && arm.solved == 0) {
      bool all_capped = true;
      for (const double ms : arm.samples)
        if (ms < static_cast<double>(kExperimentCap.count()) - 50.0) all_capped = false;
      if (all_capped) {
        arm.samples.resize(30, static_cast<double>(kExperimentCap.count()));
        progress("[%s] workers=%d censored at %lld ms after 5 timeouts; padding arm", tag,
                 workers, static_cast<long long>(kExperimentCap.count()));
        break;
      }
    }
  }
  return arm;
}

Experiment run_experiment(const adsearch::Problem& model, std::uint64_t seed_base,
                          const char* tag) {
  const SolverParams params = model.default_params();
  Experiment e;
  e.one = run_arm(model, params, 1, seed_base, adsearch::StartMode::IndependentRandom, tag);
  e.eight = run_arm(model, params, 8, seed_base, adsearch::StartMode::IndependentRandom, tag);
  return e;
}

struct SharedData {
  std::optional<Experiment> ais, partition;
  std::uint64_t ais_seed = 0xC4100;
  std::uint64_t partition_seed = 0xC4200;

  const Experiment& get_ais() {
    if (!ais) {
      const adsearch::AllIntervalProblem p(100);
      ais = run_experiment(p, ais_seed, "c4 ais100");
    }
    return *ais;
  }
  const Experiment& get_partition() {
    if (!partition) {
      const adsearch::PartitionProblem p(512);
      partition = run_experiment(p, partition_seed, "c4 part512");
    }
    return *partition;
  }
};

SharedData g_shared;

Check criterion4() {
  const Experiment& ais = g_shared.get_ais();
  const Experiment& part = g_shared.get_partition();

  char buf[256];
  std::string summary;
  bool all_ok = true;
  const std::vector<std::pair<const char*, const Experiment*>> arms{
      {"all-interval n=100", &ais}, {"partition n=512", &part}};
  for (const auto& [label, e] : arms) {
    const double t1 = adsearch::trimmed_mean(e->one.samples);
    const double t8 = adsearch::trimmed_mean(e->eight.samples);
    const bool ok = t8 <= 0.5 * t1;
    std::snprintf(buf, sizeof buf, "%s%s trimmed 1w=%.0f ms 8w=%.0f ms (ratio %.3f)",
                  ok ? "" : "MISSED: ", label, t1, t8, t8 / t1);
    progress("[c4] %s", buf);
    all_ok = all_ok && ok;
    if (!summary.empty()) summary += "; ";
    summary += buf;
  }
  return {all_ok, summary};
}

bool variance_gate(const Experiment& a, const Experiment& b, std::string& detail) {
  const auto stddev = [](const Arm& arm) { return adsearch::sample_stddev(arm.samples); };
  const auto worst = [](const Arm& arm) {
    return *std::max_element(arm.samples.begin(), arm.samples.end());
  };

  const bool stddev_a = stddev(a.eight) < stddev(a.one);
  const bool stddev_b = stddev(b.eight) < stddev(b.one);
  const bool worst_a = worst(a.eight) < worst(a.one);
  const bool worst_b = worst(b.eight) < worst(b.one);

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "stddev: ais %.0f->%.0f, part %.0f->%.0f; worst: ais %.0f->%.0f, part %.0f->%.0f",
                stddev(a.one), stddev(a.eight), stddev(b.one), stddev(b.eight), worst(a.one),
                worst(a.eight), worst(b.one), worst(b.eight));
  detail = buf;
  return (stddev_a || stddev_b) && (worst_a || worst_b);
}

Check criterion5() {
  std::string detail;
  if (variance_gate(g_shared.get_ais(), g_shared.get_partition(), detail))
    return {true, detail};
  progress("[c5] first attempt failed (%s); rerunning once", detail.c_str());

  const adsearch::AllIntervalProblem ais(100);
  const adsearch::PartitionProblem part(512);
  const Experiment ais2 = run_experiment(ais, g_shared.ais_seed + 1000, "c5 ais100 rerun");
  const Experiment part2 =
      run_experiment(part, g_shared.partition_seed + 1000, "c5 part512 rerun");
  std::string detail2;
  if (variance_gate(ais2, part2, detail2)) return {true, detail2 + " (rerun)"};
  return {false, detail + " | rerun: " + detail2};
}

Check criterion6() {
  const Experiment& indep = g_shared.get_ais();
  const double indep_trimmed = adsearch::trimmed_mean(indep.eight.samples);
  const double indep_rate = indep.eight.solved / 30.0;

  const adsearch::AllIntervalProblem p(100);
  const Arm shared = run_arm(p, p.default_params(), 8, g_shared.ais_seed,
                             adsearch::StartMode::SharedInitial, "c6 shared");
  const double shared_trimmed = adsearch::trimmed_mean(shared.samples);
  const double shared_rate = shared.solved / 30.0;

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "shared trimmed %.0f ms vs independent %.0f ms (ratio %.3f), solve rates "
                "%.2f vs %.2f",
                shared_trimmed, indep_trimmed, shared_trimmed / indep_trimmed, shared_rate,
                indep_rate);
  progress("[c6] %s", buf);

  if (shared.solved == 0 && indep.eight.solved == 0)
    return {false, std::string(buf) + " — no solves in either mode"};
  const double ratio = shared_trimmed / indep_trimmed;
  if (ratio < 0.8 || ratio > 1.6) return {false, std::string(buf) + " outside [0.8, 1.6]"};
  if (shared.solved != indep.eight.solved)
    return {false, std::string(buf) + " solve rates differ"};
  return {true, buf};
}

// ------------------------------------------------------------------ criterion 7

Check criterion7() {
  namespace fs = std::filesystem;
  const fs::path params_file =
      fs::temp_directory_path() / ("adsearch_acceptance_params_" + std::to_string(::getpid()));
  {
    std::ofstream out(params_file);
    out << "max_iterations=3000\nmax_restarts=2\n";
  }

  const std::vector<std::string> problems{
      "--problem all-interval --size 14",
      "--problem partition --size 16",
      "--problem magic-square --size 4",
      "--problem perfect-square --instance 1",
  };

  for (const std::string& problem : problems) {
    for (std::uint64_t seed = 11; seed <= 15; ++seed) {
      const std::string args = "solve " + problem + " --workers 1 --seed " +
                               std::to_string(seed) + " --params " + params_file.string();
      const CliResult a = run_cli(args);
      const CliResult b = run_cli(args);
      if (a.exit_code != 0 || b.exit_code != 0) {
        fs::remove(params_file);
        return {false, "cli failed: " + args + " -> " + a.raw.substr(0, 200)};
      }
      for (const char* key : {"iterations_total", "restarts_used", "configuration"}) {
        if (a.fields.at(key) != b.fields.at(key)) {
          fs::remove(params_file);
          return {false, std::string(key) + " differs for: " + args};
        }
      }
    }
  }
  fs::remove(params_file);
  return {true, "40 paired runs identical across 4 problems x 5 seeds"};
}

// ------------------------------------------------------------------ criterion 8

Check criterion8() {
  struct Case {
    std::string cli_args;
    std::function<Cost(const Configuration&)> recompute;
    int runs;
  };
  const std::vector<Case> cases{
      {"--problem magic-square --size 40",
       [](const Configuration& c) { return adsearch::MagicSquareProblem(40).cost(c); }, 7},
      {"--problem all-interval --size 300",
       [](const Configuration& c) { return adsearch::AllIntervalProblem(300).cost(c); }, 7},
      {"--problem partition --size 2048",
       [](const Configuration& c) { return adsearch::PartitionProblem(2048).cost(c); }, 6},
  };

  std::uint64_t seed = 21;
  int checked = 0;
  for (const Case& c : cases) {
    for (int run = 0; run < c.runs; ++run, ++seed) {
      const std::string args = "solve " + c.cli_args + " --workers 1 --seed " +
                               std::to_string(seed) + " --timeout 150";
      const CliResult r = run_cli(args);
      if (r.exit_code != 0) return {false, "cli failed: " + args};
      if (r.fields.at("status") != "interrupted")
        return {false, "run not interrupted: " + args + " -> " + r.fields.at("status")};

      const Cost cost = std::stoll(r.fields.at("cost"));
      const Cost initial = std::stoll(r.fields.at("initial_cost"));
      if (cost > initial)
        return {false, "cost above initial for: " + args};

      const Configuration config = parse_configuration(r.fields.at("configuration"));
      const Cost recomputed = c.recompute(config);
      if (recomputed != cost)
        return {false, "reported cost " + std::to_string(cost) + " != recomputed " +
                           std::to_string(recomputed) + " for: " + args};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + "/20 interrupted runs honored the anytime contract"};
}

// ------------------------------------------------------------------ criterion 9

Check criterion9() {
  const auto close = [](double a, double b) { return std::abs(a - b) < 1e-9; };

  if (!close(adsearch::trimmed_mean({5, 1, 9}), 5.0)) return {false, "trimmed [5,1,9] != 5"};
  if (!close(adsearch::trimmed_mean({4, 4, 4, 4}), 4.0)) return {false, "trimmed const != 4"};
  if (!close(adsearch::trimmed_mean({1, 2, 3, 4, 100}), 3.0))
    return {false, "trimmed [1..4,100] != 3"};

  bool threw = false;
  try {
    (void)adsearch::trimmed_mean({1.0, 2.0});
  } catch (const adsearch::TooFewSamples&) {
    threw = true;
  }
  if (!threw) return {false, "trimmed_mean accepted two samples"};

  if (!close(adsearch::sample_stddev({2, 4}), std::sqrt(2.0)))
    return {false, "stddev [2,4] != sqrt(2)"};
  if (!close(adsearch::sample_stddev({6, 6, 6}), 0.0)) return {false, "stddev const != 0"};

  std::map<int, adsearch::StatsSummary> table;
  table[1] = adsearch::summarize({100.0, 891.2, 891.2, 891.2, 2000.0});
  table[16] = adsearch::summarize({10.0, 40.0, 40.0, 40.0, 100.0});
  const auto rows = adsearch::speedup_table(table);
  if (rows.size() != 2 || !close(rows[0].stats.speedup_vs_baseline, 1.0))
    return {false, "baseline speedup != 1"};
  if (!close(rows[1].stats.speedup_vs_baseline, 891.2 / 40.0))
    return {false, "speedup != 22.28"};

  Rng rng(0xACCE97);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng.below(60);
    std::vector<double> samples(n);
    for (double& s : samples) s = static_cast<double>(rng.below(1000000)) / 250.0;
    const adsearch::StatsSummary s = adsearch::summarize(samples);
    if (!(s.best <= s.trimmed_mean + 1e-9 && s.trimmed_mean <= s.worst + 1e-9))
      return {false, "ordering invariant violated"};
    if (s.stddev < 0) return {false, "negative stddev"};
    const bool all_equal =
        std::all_of(samples.begin(), samples.end(),
                    [&](double x) { return close(x, samples[0]); });
    if (all_equal && !close(s.stddev, 0.0)) return {false, "constant list stddev != 0"};
  }
  return {true, "hand examples exact; 1000 random lists satisfy the invariants"};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--cli") == 0 && i + 1 < argc) {
      g_cli_path = argv[++i];
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      std::istringstream in(argv[++i]);
      std::string token;
      while (std::getline(in, token, ',')) only.insert(std::atoi(token.c_str()));
    } else {
      std::fprintf(stderr, "usage: acceptance --cli <adsearch-binary> [--only 1,2,...]\n");
      return 2;
    }
  }
  if (g_cli_path.empty()) {
    std::fprintf(stderr, "error: --cli <adsearch-binary> is required\n");
    return 2;
  }

  struct Criterion {
    int id;
    const char* label;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "solution correctness oracles", criterion1},
      {2, "brute-force solution-set equivalence", criterion2},
      {3, "desk-scale hard instances with 8 workers", criterion3},
      {4, "speedup direction at 8 workers", criterion4},
      {5, "variance reduction at 8 workers", criterion5},
      {6, "shared-initial start mode", criterion6},
      {7, "single-worker determinism through the CLI", criterion7},
      {8, "anytime contract under timeouts", criterion8},
      {9, "statistics kernel", criterion9},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Check check;
    try {
      check = c.run();
    } catch (const std::exception& e) {
      check = {false, std::string("exception: ") + e.what()};
    }
    const double secs = elapsed_ms_since(t0) / 1000.0;
    std::printf("%s criterion %d: %s — %s (%.1f s)\n", check.ok ? "PASS" : "FAIL", c.id,
                c.label, check.detail.c_str(), secs);
    std::fflush(stdout);
    if (!check.ok) ++failures;
  }

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
