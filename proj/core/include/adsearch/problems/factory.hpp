#pragma once

#include <memory>
#include <string>

#include "adsearch/problem.hpp"
#include "adsearch/problems/perfect_square.hpp"

namespace adsearch {

struct ProblemOptions {
  std::string problem;   // all-interval | partition | magic-square | perfect-square
  int size = 0;          // n (board side for magic-square); bundled id for perfect-square
  std::string instance;  // perfect-square: "1".."5" (bundled) or a file path
  PerfectSquareWeights weights{};
};

// Constructs a problem by CLI-style name. Throws InvalidInstance on unknown
// names or bad instance arguments.
std::unique_ptr<Problem> make_problem(const ProblemOptions& options);

}  // namespace adsearch
