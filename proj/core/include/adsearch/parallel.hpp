#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "adsearch/engine.hpp"
#include "adsearch/problem.hpp"

namespace adsearch {

// How workers pick their starting configuration.
enum class StartMode {
  IndependentRandom,  // each worker draws its own initial permutation
  SharedInitial,      // all workers start from one common random permutation
};

std::string to_string(StartMode mode);

// Reserved stream id for drawing the shared initial configuration, outside
// the worker-id range so it never collides with a worker's stream.
inline constexpr std::uint64_t kSharedInitialStream = 0x8000000000000000ull;

struct ParallelConfig {
  int workers = 1;
  StartMode start_mode = StartMode::IndependentRandom;
  std::uint64_t master_seed = 0;
  std::optional<std::chrono::milliseconds> wall_clock_limit;
};

// Per-worker counters frozen at worker termination.
struct WorkerReport {
  int id = 0;
  Status status = Status::Exhausted;
  Cost cost = 0;
  long long iterations_total = 0;
  int restarts_used = 0;
  Cost initial_cost = 0;
  double finish_ms = 0.0;  // relative to the group's T0
};

struct ParallelOutcome {
  Status status = Status::Exhausted;
  Configuration config;       // best over all workers
  Cost cost = 0;              // cost of `config`
  std::optional<int> winner;  // solving worker id, if any
  double elapsed_ms = 0.0;    // T1 - T0: before first launch to after last join
  std::vector<WorkerReport> per_worker;
  int workers_launched = 0;
  bool spawn_failure = false;
};

// A running group of independent search workers over one shared model.
// Workers communicate only through a set-once atomic stop flag; the first
// solution wins (ties broken by lowest worker id).
class SearchGroup {
 public:
  using ThreadFactory = std::function<std::thread(std::function<void()>)>;

  SearchGroup(const Problem& model, const SolverParams& params, const ParallelConfig& config,
              ThreadFactory factory = {});
  ~SearchGroup();

  SearchGroup(const SearchGroup&) = delete;
  SearchGroup& operator=(const SearchGroup&) = delete;

  // Ask all workers to halt at their next iteration boundary.
  void request_stop();
  // Block until every worker has terminated.
  void wait();
  // Wait for termination and aggregate (idempotent; result is cached).
  const ParallelOutcome& join();

 private:
  void run_worker(int id);
  void aggregate();

  const Problem& model_;
  SolverParams params_;
  ParallelConfig config_;
  std::chrono::steady_clock::time_point t0_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  Configuration shared_initial_;
  std::atomic<bool> stop_{false};
  std::vector<std::thread> threads_;
  std::vector<WorkerReport> reports_;
  std::vector<Configuration> configs_;
  std::mutex error_mutex_;
  std::exception_ptr worker_error_;
  bool spawn_failure_ = false;
  bool joined_ = false;
  std::optional<ParallelOutcome> outcome_;
};

// Launch `config.workers` independent searches and aggregate first-wins.
ParallelOutcome solve_parallel(const Problem& model, const SolverParams& params,
                               const ParallelConfig& config);

// Broadcast stop to a running group and return once all workers terminated.
void stop_broadcast(SearchGroup& group);

}  // namespace adsearch
