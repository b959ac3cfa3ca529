#include "adsearch/problem.hpp"

#include <algorithm>

namespace adsearch {

void Problem::variable_errors(const Configuration& config, std::vector<Cost>& out) const {
  // Uniform-role fallback: every variable carries the total cost, making
  // culprit selection a uniform draw among non-frozen variables.
  out.assign(static_cast<std::size_t>(variable_count()), cost(config));
}

void Problem::candidate_moves(const Configuration& config, int culprit,
                              std::vector<Move>& out) const {
  const int n = static_cast<int>(config.size());
  out.clear();
  out.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int j = 0; j < n; ++j) {
    if (j != culprit) out.push_back(Move{culprit, j});
  }
}

SolverParams Problem::default_params() const {
  return adsearch::default_params(variable_count());
}

}  // namespace adsearch
