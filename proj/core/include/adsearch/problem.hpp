#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "adsearch/params.hpp"

namespace adsearch {

// A complete assignment: the value held by each of the n positions. Always a
// permutation of the problem's base value multiset.
using Configuration = std::vector<int>;

using Cost = std::int64_t;

struct InvalidInstance : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A candidate change: swap the values at positions i and j.
struct Move {
  int i = 0;
  int j = 0;
};

inline void apply_move(Configuration& config, const Move& m) {
  std::swap(config[m.i], config[m.j]);
}

class Evaluator;

// Abstract permutation problem: n positions holding a fixed multiset of
// values; cost is zero exactly at solutions. Instances are immutable after
// construction and safe to share across concurrently running engines.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::string name() const = 0;
  virtual int variable_count() const = 0;
  virtual const std::vector<int>& base_values() const = 0;

  virtual Cost cost(const Configuration& config) const = 0;

  // Per-variable error projection used to rank culprit candidates. The
  // default treats every variable alike (uniform role): each gets the total
  // cost, so culprit selection degenerates to a uniform draw among the
  // non-frozen variables.
  virtual void variable_errors(const Configuration& config, std::vector<Cost>& out) const;

  // Candidate moves for a culprit position. Default: swap the culprit with
  // every other position.
  virtual void candidate_moves(const Configuration& config, int culprit,
                               std::vector<Move>& out) const;

  // Independent solution check. Deliberately shares no logic with cost();
  // used to re-verify every claimed solution.
  virtual bool validate(const Configuration& config) const = 0;

  virtual std::unique_ptr<Evaluator> make_evaluator() const = 0;

  // Tuned parameters for this problem; falls back to default_params(n).
  virtual SolverParams default_params() const;
};

// Incremental cost oracle bound to one configuration. Engines mutate the
// search state exclusively through an evaluator so problems can keep O(1)
// swap probes; correctness against full recomputation is cross-checked in
// the tests.
class Evaluator {
 public:
  virtual ~Evaluator() = default;

  // Copies the configuration and rebuilds the internal caches.
  void bind(const Configuration& config) {
    cfg_ = config;
    rebuild();
  }

  const Configuration& config() const { return cfg_; }

  virtual Cost cost() const = 0;

  // Cost of the configuration obtained by swapping positions i and j.
  // Does not commit the swap.
  virtual Cost swap_cost(int i, int j) = 0;

  // Commit a swap. The default rebuilds from scratch; evaluators with
  // incremental structure override it.
  virtual void apply_swap(int i, int j) {
    std::swap(cfg_[i], cfg_[j]);
    rebuild();
  }

  // Per-variable errors of the bound configuration (same definition as the
  // owning problem's variable_errors).
  virtual void variable_errors(std::vector<Cost>& out) const = 0;

 protected:
  virtual void rebuild() = 0;

  Configuration cfg_;
};

}  // namespace adsearch
