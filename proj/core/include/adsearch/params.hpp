#pragma once

#include <cstdint>
#include <stdexcept>

namespace adsearch {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Tuning knobs of the search. The comments give the conventional short names
// used throughout the code and docs.
struct SolverParams {
  int tabu_tenure = 10;           // T: iterations a variable stays frozen after a failed repair
  int reset_limit = 2;            // RL: frozen-variable count that triggers a partial reset
  double reset_percentage = 0.1;  // RP: fraction of positions shuffled by a partial reset
  long long max_iterations = 0;   // Max_I: iteration budget per restart
  int max_restarts = 10;          // Max_R: extra random restarts after the first attempt
  std::uint64_t rng_seed = 0;     // seed used by drivers that construct the generator
};

// Generic fallback parameters for an n-variable problem:
// T=10, RL=max(2, n/10), RP=0.1, Max_I=100*n, Max_R=10.
// Problems override these with tuned values via Problem::default_params().
SolverParams default_params(int n);

// Throws InvalidParams when a field is out of range for an n-variable problem.
void validate_params(const SolverParams& p, int n);

}  // namespace adsearch
