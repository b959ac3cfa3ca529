#pragma once

#include "adsearch/problem.hpp"

namespace adsearch {

// Series of length n over the values {0..n-1}; solved when the n-1 absolute
// differences of consecutive elements form a permutation of {1..n-1}
// (CSPLib prob007).
class AllIntervalProblem final : public Problem {
 public:
  explicit AllIntervalProblem(int n);  // n >= 2, else InvalidInstance

  std::string name() const override { return "all-interval"; }
  int variable_count() const override { return n_; }
  const std::vector<int>& base_values() const override { return values_; }
  Cost cost(const Configuration& config) const override;
  void candidate_moves(const Configuration& config, int culprit,
                       std::vector<Move>& out) const override;
  bool validate(const Configuration& config) const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;
  SolverParams default_params() const override;

 private:
  int n_;
  std::vector<int> values_;
};

// Cost = total duplicate excess of the difference multiset, which equals the
// number of values in {1..n-1} that never occur. Zero iff solved.
Cost all_interval_cost(const Configuration& config);

}  // namespace adsearch
