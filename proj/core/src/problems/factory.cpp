#include "adsearch/problems/factory.hpp"

#include <cctype>

#include "adsearch/problems/all_interval.hpp"
#include "adsearch/problems/magic_square.hpp"
#include "adsearch/problems/partition.hpp"

namespace adsearch {

namespace {

bool is_bundled_id(const std::string& text) {
  return text.size() == 1 && text[0] >= '1' && text[0] <= '5';
}

}  // namespace

std::unique_ptr<Problem> make_problem(const ProblemOptions& options) {
  if (options.problem == "all-interval") return std::make_unique<AllIntervalProblem>(options.size);
  if (options.problem == "partition") return std::make_unique<PartitionProblem>(options.size);
  if (options.problem == "magic-square") return std::make_unique<MagicSquareProblem>(options.size);
  if (options.problem == "perfect-square") {
    if (is_bundled_id(options.instance))
      return std::make_unique<PerfectSquareProblem>(
          bundled_perfect_square(options.instance[0] - '0', options.weights));
    if (!options.instance.empty())
      return std::make_unique<PerfectSquareProblem>(
          PerfectSquareProblem::load(options.instance, options.weights));
    if (options.size >= 1 && options.size <= 5)
      return std::make_unique<PerfectSquareProblem>(
          bundled_perfect_square(options.size, options.weights));
    throw InvalidInstance("perfect-square needs --instance 1..5 or an instance file path");
  }
  throw InvalidInstance("unknown problem: '" + options.problem + "'");
}

}  // namespace adsearch
