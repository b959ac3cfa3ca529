#pragma once

#include <utility>

#include "adsearch/problem.hpp"

namespace adsearch {

// Partition {1..n} into two groups of n/2 numbers with equal sums and equal
// sums of squares. Positions 0..n/2-1 are group A, the rest group B; a
// configuration is the permutation of 1..n laid over those positions.
// Solutions exist iff n is a multiple of 8.
class PartitionProblem final : public Problem {
 public:
  explicit PartitionProblem(int n);  // n >= 8 and n % 8 == 0, else InvalidInstance

  std::string name() const override { return "partition"; }
  int variable_count() const override { return n_; }
  const std::vector<int>& base_values() const override { return values_; }
  Cost cost(const Configuration& config) const override;
  // Uniform role: every variable reports the total cost.
  void variable_errors(const Configuration& config, std::vector<Cost>& out) const override;
  // Swaps within a group never change the cost, so only cross-group swaps
  // are candidates.
  void candidate_moves(const Configuration& config, int culprit,
                       std::vector<Move>& out) const override;
  bool validate(const Configuration& config) const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;
  SolverParams default_params() const override;

  Cost target_sum() const { return target_sum_; }            // n(n+1)/4
  Cost target_square_sum() const { return target_sq_sum_; }  // n(n+1)(2n+1)/12

  // (|sum(A) - target_sum|, |sumsq(A) - target_square_sum|)
  std::pair<Cost, Cost> constraint_errors(const Configuration& config) const;

 private:
  int n_;
  std::vector<int> values_;
  Cost target_sum_;
  Cost target_sq_sum_;
};

// Free-function forms; n is taken from config.size().
Cost partition_cost(const Configuration& config);
std::pair<Cost, Cost> partition_errors(const Configuration& config);

}  // namespace adsearch
