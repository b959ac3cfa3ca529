#include "adsearch/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adsearch {

const char* to_string(Status s) {
  switch (s) {
    case Status::Solved: return "solved";
    case Status::Exhausted: return "exhausted";
    case Status::Interrupted: return "interrupted";
  }
  return "unknown";
}

SolverParams default_params(int n) {
  SolverParams p;
  p.tabu_tenure = 10;
  p.reset_limit = std::max(2, n / 10);
  p.reset_percentage = 0.1;
  p.max_iterations = 100LL * n;
  p.max_restarts = 10;
  return p;
}

void validate_params(const SolverParams& p, int n) {
  if (n < 1) throw InvalidParams("variable count must be >= 1");
  if (p.tabu_tenure < 1) throw InvalidParams("tabu_tenure must be >= 1");
  if (p.reset_limit < 1) throw InvalidParams("reset_limit must be >= 1");
  if (!(p.reset_percentage > 0.0) || p.reset_percentage > 1.0)
    throw InvalidParams("reset_percentage must be in (0, 1]");
  if (p.max_iterations < 1) throw InvalidParams("max_iterations must be >= 1");
  if (p.max_restarts < 0) throw InvalidParams("max_restarts must be >= 0");
}

Configuration random_permutation(const Problem& model, Rng& rng) {
  Configuration config = model.base_values();
  shuffle(config, rng);
  return config;
}

std::optional<int> select_culprit(const std::vector<Cost>& errors, const SearchState& state,
                                  Rng& rng) {
  const int n = static_cast<int>(errors.size());
  int chosen = -1;
  Cost best = 0;
  std::uint64_t ties = 0;
  for (int i = 0; i < n; ++i) {
    if (state.tabu_until[static_cast<std::size_t>(i)] > state.iteration) continue;  // frozen
    if (chosen < 0 || errors[static_cast<std::size_t>(i)] > best) {
      chosen = i;
      best = errors[static_cast<std::size_t>(i)];
      ties = 1;
    } else if (errors[static_cast<std::size_t>(i)] == best) {
      ++ties;
      if (rng.below(ties) == 0) chosen = i;
    }
  }
  if (chosen < 0) return std::nullopt;  // every variable frozen
  return chosen;
}

std::optional<MoveChoice> evaluate_moves(const Problem& model, Evaluator& eval, int culprit,
                                         Rng& rng) {
  static thread_local std::vector<Move> moves;
  model.candidate_moves(eval.config(), culprit, moves);

  bool have = false;
  Move best_move{};
  Cost best_cost = 0;
  std::uint64_t ties = 0;
  for (const Move& m : moves) {
    const Cost c = eval.swap_cost(m.i, m.j);
    if (!have || c < best_cost) {
      have = true;
      best_move = m;
      best_cost = c;
      ties = 1;
    } else if (c == best_cost) {
      ++ties;
      if (rng.below(ties) == 0) best_move = m;
    }
  }
  if (!have || best_cost >= eval.cost()) return std::nullopt;  // strict improvement only
  return MoveChoice{best_move, best_cost};
}

std::optional<MoveChoice> evaluate_moves(const Problem& model, const Configuration& config,
                                         int culprit, Rng& rng) {
  auto eval = model.make_evaluator();
  eval->bind(config);
  return evaluate_moves(model, *eval, culprit, rng);
}

void partial_reset(Configuration& config, double reset_percentage, SearchState& state,
                   Rng& rng) {
  const int n = static_cast<int>(config.size());
  int k = static_cast<int>(std::max<long long>(1, std::llround(reset_percentage * n)));
  if (k > n) k = n;

  // Partial Fisher–Yates: the first k entries of the pool are the selection.
  static thread_local std::vector<int> pool;
  pool.resize(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }

  static thread_local std::vector<int> vals;
  vals.resize(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) vals[static_cast<std::size_t>(t)] = config[static_cast<std::size_t>(pool[static_cast<std::size_t>(t)])];
  shuffle(vals, rng);
  for (int t = 0; t < k; ++t) {
    const int p = pool[static_cast<std::size_t>(t)];
    config[static_cast<std::size_t>(p)] = vals[static_cast<std::size_t>(t)];
    state.tabu_until[static_cast<std::size_t>(p)] = 0;  // unfreeze the reset positions
  }

  int cnt = 0;
  for (const long long until : state.tabu_until)
    if (until > state.iteration) ++cnt;
  state.tabu_count = cnt;
}

namespace {

struct BestTracker {
  SearchState& state;
  const SolveControls& controls;

  void note(const Evaluator& eval, StepKind kind, int culprit) {
    const Cost c = eval.cost();
    if (c < state.restart_best_cost) {
      state.restart_best_cost = c;
      state.restart_best_config = eval.config();
    }
    if (c < state.best_cost) {
      state.best_cost = c;
      state.best_config = eval.config();
    }
    if (controls.on_step) controls.on_step(StepEvent{kind, culprit, c}, state, eval.config());
  }
};

}  // namespace

Outcome solve_sequential(const Problem& model, const SolverParams& params, Rng rng,
                         const SolveControls& controls) {
  const int n = model.variable_count();
  validate_params(params, n);

  auto eval = model.make_evaluator();
  SearchState state;
  state.tabu_until.assign(static_cast<std::size_t>(n), 0);

  Outcome out;
  std::vector<Cost> errors(static_cast<std::size_t>(n));
  BestTracker tracker{state, controls};

  const auto interrupted = [&]() {
    if (controls.stop && controls.stop->load(std::memory_order_relaxed)) return true;
    return controls.deadline && std::chrono::steady_clock::now() >= *controls.deadline;
  };
  const auto finalize = [&](Status status) {
    out.status = status;
    out.config = state.best_config;
    out.cost = state.best_cost;
    out.restarts_used = state.restart;
    out.restart_best_cost = state.restart_best_cost;
    return out;
  };

  for (int attempt = 0; attempt <= params.max_restarts; ++attempt) {
    state.restart = attempt;
    state.iteration = 0;
    std::fill(state.tabu_until.begin(), state.tabu_until.end(), 0);
    state.tabu_count = 0;

    if (attempt == 0 && controls.initial) {
      eval->bind(*controls.initial);
    } else {
      eval->bind(random_permutation(model, rng));
    }
    state.restart_best_cost = eval->cost();
    state.restart_best_config = eval->config();
    if (attempt == 0) {
      out.initial_cost = eval->cost();
      state.best_cost = eval->cost();
      state.best_config = eval->config();
    }
    tracker.note(*eval, attempt == 0 ? StepKind::Draw : StepKind::Restart, -1);

    for (;;) {
      // Solution checked before the stop flag: a worker that just reached
      // cost zero reports Solved even if a broadcast raced it.
      if (eval->cost() == 0) return finalize(Status::Solved);
      if (interrupted()) return finalize(Status::Interrupted);
      if (state.iteration >= params.max_iterations) break;  // restart

      ++state.iteration;
      ++out.iterations_total;

      // Live recount: marks expire as the iteration counter advances.
      int cnt = 0;
      for (const long long until : state.tabu_until)
        if (until > state.iteration) ++cnt;
      state.tabu_count = cnt;

      eval->variable_errors(errors);
      const auto culprit = select_culprit(errors, state, rng);
      if (!culprit) {
        // Everything frozen before the reset limit tripped: forced reset.
        Configuration cfg = eval->config();
        partial_reset(cfg, params.reset_percentage, state, rng);
        eval->bind(cfg);
        tracker.note(*eval, StepKind::Reset, -1);
        continue;
      }
      if (controls.on_step)
        controls.on_step(StepEvent{StepKind::CulpritSelected, *culprit, eval->cost()}, state,
                         eval->config());

      const auto choice = evaluate_moves(model, *eval, *culprit, rng);
      if (choice) {
        eval->apply_swap(choice->move.i, choice->move.j);
        tracker.note(*eval, StepKind::MoveApplied, *culprit);
      } else {
        state.tabu_until[static_cast<std::size_t>(*culprit)] =
            state.iteration + params.tabu_tenure;
        ++state.tabu_count;
        tracker.note(*eval, StepKind::TabuMarked, *culprit);
        if (state.tabu_count > params.reset_limit) {
          Configuration cfg = eval->config();
          partial_reset(cfg, params.reset_percentage, state, rng);
          eval->bind(cfg);
          tracker.note(*eval, StepKind::Reset, *culprit);
        }
      }
    }
  }
  return finalize(Status::Exhausted);
}

}  // namespace adsearch
