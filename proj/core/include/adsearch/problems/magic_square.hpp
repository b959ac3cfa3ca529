#pragma once

#include "adsearch/problem.hpp"

namespace adsearch {

// n x n board holding 1..n^2 row-major; every row, column and both diagonals
// must sum to the magic constant n(n^2+1)/2 (CSPLib prob019).
class MagicSquareProblem final : public Problem {
 public:
  explicit MagicSquareProblem(int n);  // n >= 1, else InvalidInstance

  std::string name() const override { return "magic-square"; }
  int variable_count() const override { return n_ * n_; }
  const std::vector<int>& base_values() const override { return values_; }
  Cost cost(const Configuration& config) const override;
  // Cell error = sum of |line error| over the 2-4 lines through the cell.
  void variable_errors(const Configuration& config, std::vector<Cost>& out) const override;
  bool validate(const Configuration& config) const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;
  SolverParams default_params() const override;

  int board_side() const { return n_; }
  Cost magic_constant() const { return magic_; }

 private:
  int n_;
  std::vector<int> values_;
  Cost magic_;
};

// Free-function form; the board side is sqrt(config.size()), which must be exact.
Cost magic_square_cost(const Configuration& config);

}  // namespace adsearch
