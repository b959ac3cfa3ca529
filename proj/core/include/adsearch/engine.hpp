#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adsearch/problem.hpp"
#include "adsearch/rng.hpp"

namespace adsearch {

enum class Status { Solved, Exhausted, Interrupted };

// Lowercase names, used verbatim in CLI output and reports.
const char* to_string(Status s);

// Mutable per-run bookkeeping. Position i is frozen (tabu) while
// tabu_until[i] > iteration; tabu_count is the live count of frozen
// positions and is kept equal to |{i : tabu_until[i] > iteration}| at every
// observation point.
struct SearchState {
  long long iteration = 0;  // within the current restart
  int restart = 0;          // fresh random draws performed beyond the first attempt
  std::vector<long long> tabu_until;
  int tabu_count = 0;
  Configuration best_config;  // best across all restarts
  Cost best_cost = 0;
  Configuration restart_best_config;  // best within the current restart
  Cost restart_best_cost = 0;
};

struct Outcome {
  Status status = Status::Exhausted;
  Configuration config;  // best pseudo-solution found (anytime contract)
  Cost cost = 0;
  long long iterations_total = 0;
  int restarts_used = 0;
  Cost initial_cost = 0;       // cost of the very first configuration
  Cost restart_best_cost = 0;  // best cost within the final restart
};

// Step-trace hook, fired by the engine after every state change. Used by the
// tests to check invariants mid-run; costs nothing when unset.
enum class StepKind {
  Draw,             // initial configuration bound (first attempt)
  Restart,          // fresh configuration bound on a later attempt
  CulpritSelected,  // culprit picked, before the move scan
  MoveApplied,      // improving swap committed
  TabuMarked,       // no improving move: culprit frozen
  Reset,            // partial reset applied
};

struct StepEvent {
  StepKind kind;
  int culprit = -1;  // -1 when not applicable
  Cost cost = 0;     // configuration cost after the step
};

using StepHook =
    std::function<void(const StepEvent&, const SearchState&, const Configuration&)>;

struct SolveControls {
  const std::atomic<bool>* stop = nullptr;  // cooperative cancel, checked once per iteration
  std::optional<std::chrono::steady_clock::time_point> deadline;  // wall-clock budget
  const Configuration* initial = nullptr;  // start here instead of a random draw
  StepHook on_step;
};

// Uniformly shuffled permutation of the problem's base values.
Configuration random_permutation(const Problem& model, Rng& rng);

// Index of the highest-error non-frozen variable, ties broken uniformly at
// random; nullopt when every variable is frozen (the caller must force a
// partial reset).
std::optional<int> select_culprit(const std::vector<Cost>& errors, const SearchState& state,
                                  Rng& rng);

struct MoveChoice {
  Move move;
  Cost next_cost;
};

// Scans every candidate move of the culprit and returns the one minimizing
// the next configuration's cost (ties uniform). Returns nullopt when the
// best candidate does not strictly improve on the current cost.
std::optional<MoveChoice> evaluate_moves(const Problem& model, Evaluator& eval, int culprit,
                                         Rng& rng);
// Convenience overload binding a fresh evaluator to config.
std::optional<MoveChoice> evaluate_moves(const Problem& model, const Configuration& config,
                                         int culprit, Rng& rng);

// Picks k = max(1, round(reset_percentage * n)) positions uniformly at random
// (partial Fisher–Yates over the index pool, consuming k draws), shuffles the
// values they hold among themselves, clears their tabu marks and recounts
// state.tabu_count. The global permutation invariant is preserved.
void partial_reset(Configuration& config, double reset_percentage, SearchState& state,
                   Rng& rng);

// The sequential search: restart loop around an iteration loop of
// culprit selection / min-conflict move / tabu marking / partial resets.
// Returns Solved with a zero-cost configuration, Exhausted with the best
// pseudo-solution after all restarts, or Interrupted when the stop flag or
// deadline fires. Throws InvalidParams before any search work.
Outcome solve_sequential(const Problem& model, const SolverParams& params, Rng rng,
                         const SolveControls& controls = {});

}  // namespace adsearch
