#include "adsearch/parallel.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "adsearch/rng.hpp"

namespace adsearch {

namespace {

double ms_since(std::chrono::steady_clock::time_point from,
                std::chrono::steady_clock::time_point to) {
  return std::chrono::duration<double, std::milli>(to - from).count();
}

}  // namespace

std::string to_string(StartMode mode) {
  return mode == StartMode::IndependentRandom ? "random" : "shared";
}

SearchGroup::SearchGroup(const Problem& model, const SolverParams& params,
                         const ParallelConfig& config, ThreadFactory factory)
    : model_(model), params_(params), config_(config) {
  if (config_.workers < 1) throw std::invalid_argument("workers must be >= 1");
  validate_params(params_, model_.variable_count());
  if (!factory) {
    factory = [](std::function<void()> body) { return std::thread(std::move(body)); };
  }

  const std::size_t n = static_cast<std::size_t>(config_.workers);
  reports_.resize(n);
  configs_.resize(n);

  t0_ = std::chrono::steady_clock::now();
  if (config_.wall_clock_limit) deadline_ = t0_ + *config_.wall_clock_limit;
  if (config_.start_mode == StartMode::SharedInitial) {
    Rng shared_rng(derive_stream(config_.master_seed, kSharedInitialStream));
    shared_initial_ = random_permutation(model_, shared_rng);
  }

  threads_.reserve(n);
  for (int id = 0; id < config_.workers; ++id) {
    try {
      threads_.push_back(factory([this, id] { run_worker(id); }));
    } catch (...) {
      // Workers already started continue and are aggregated; the failure is
      // reported through the outcome rather than by aborting the group.
      spawn_failure_ = true;
      break;
    }
  }
}

SearchGroup::~SearchGroup() {
  stop_.store(true, std::memory_order_relaxed);
  for (std::thread& t : threads_)
    if (t.joinable()) t.join();
}

void SearchGroup::run_worker(int id) {
  try {
    Rng rng(derive_stream(config_.master_seed, static_cast<std::uint64_t>(id)));
    SolveControls controls;
    controls.stop = &stop_;
    controls.deadline = deadline_;
    if (config_.start_mode == StartMode::SharedInitial) controls.initial = &shared_initial_;

    Outcome result = solve_sequential(model_, params_, rng, controls);

    WorkerReport& report = reports_[static_cast<std::size_t>(id)];
    report.id = id;
    report.status = result.status;
    report.cost = result.cost;
    report.iterations_total = result.iterations_total;
    report.restarts_used = result.restarts_used;
    report.initial_cost = result.initial_cost;
    report.finish_ms = ms_since(t0_, std::chrono::steady_clock::now());
    configs_[static_cast<std::size_t>(id)] = std::move(result.config);

    if (result.status == Status::Solved) stop_.store(true, std::memory_order_relaxed);
  } catch (...) {
    {
      std::lock_guard<std::mutex> lock(error_mutex_);
      if (!worker_error_) worker_error_ = std::current_exception();
    }
    stop_.store(true, std::memory_order_relaxed);
  }
}

void SearchGroup::request_stop() { stop_.store(true, std::memory_order_relaxed); }

void SearchGroup::wait() {
  for (std::thread& t : threads_)
    if (t.joinable()) t.join();
}

const ParallelOutcome& SearchGroup::join() {
  if (!joined_) {
    wait();
    if (worker_error_) std::rethrow_exception(worker_error_);
    aggregate();
    joined_ = true;
  }
  return *outcome_;
}

void SearchGroup::aggregate() {
  // Slots [0, launched) are exactly the workers that ran; ids are assigned
  // sequentially and launching stops at the first spawn failure.
  const std::size_t launched = threads_.size();

  ParallelOutcome out;
  out.elapsed_ms = ms_since(t0_, std::chrono::steady_clock::now());
  out.per_worker.assign(reports_.begin(),
                        reports_.begin() + static_cast<std::ptrdiff_t>(launched));
  out.workers_launched = static_cast<int>(launched);
  out.spawn_failure = spawn_failure_;

  // Winner: earliest solving finish time, ties to the lowest worker id.
  for (const WorkerReport& r : out.per_worker) {
    if (r.status != Status::Solved) continue;
    if (!out.winner || r.finish_ms < out.per_worker[static_cast<std::size_t>(*out.winner)].finish_ms)
      out.winner = r.id;
  }

  if (out.winner) {
    const std::size_t w = static_cast<std::size_t>(*out.winner);
    out.status = Status::Solved;
    out.config = configs_[w];
    out.cost = reports_[w].cost;
    if (!model_.validate(out.config))
      throw std::logic_error("winning configuration failed validation");
  } else {
    // Anytime aggregation: best pseudo-solution across workers.
    out.status = Status::Exhausted;
    out.cost = std::numeric_limits<Cost>::max();
    for (const WorkerReport& r : out.per_worker) {
      if (r.status == Status::Interrupted) out.status = Status::Interrupted;
      if (r.cost < out.cost) {
        out.cost = r.cost;
        out.config = configs_[static_cast<std::size_t>(r.id)];
      }
    }
    if (out.per_worker.empty()) out.cost = 0;
  }
  outcome_ = std::move(out);
}

ParallelOutcome solve_parallel(const Problem& model, const SolverParams& params,
                               const ParallelConfig& config) {
  SearchGroup group(model, params, config);
  return group.join();
}

void stop_broadcast(SearchGroup& group) {
  group.request_stop();
  group.wait();
}

}  // namespace adsearch
