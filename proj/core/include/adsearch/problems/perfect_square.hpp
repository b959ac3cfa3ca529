#pragma once

#include <filesystem>

#include "adsearch/problem.hpp"

namespace adsearch {

struct Placement {
  int size = 0;
  int x = 0;  // left edge
  int y = 0;  // bottom edge
};

struct OpenSlot {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
};

// Result of the bottom-left placement pass.
struct PlacementResult {
  std::vector<Placement> placed;
  std::vector<int> unplaced;        // the suffix of the order, from the first non-fit on
  std::vector<OpenSlot> open_slots;  // residual gaps above the final skyline
  bool complete() const { return unplaced.empty(); }
};

// Places squares in the given order, each into the lowest (then leftmost)
// open slot of the skyline. A square that does not fit in that slot — too
// wide for it or poking above the master square — stops placement; the
// remaining squares form the unplaced suffix.
PlacementResult greedy_place(const Configuration& square_order, int master_size);

// Weights of the pseudo-cost terms charged to incomplete placements.
struct PerfectSquareWeights {
  Cost unplaced_count = 10;
  Cost largest_unplaced = 1;
  Cost slot_height_sum = 1;
  Cost slot_height_max = 1;
  Cost slot_width_sum = 1;
};

// Pack the given squares into a master square with no spare capacity
// (sum of areas must equal master^2). A configuration is the placement order;
// it solves the instance when greedy placement fits every square.
class PerfectSquareProblem final : public Problem {
 public:
  PerfectSquareProblem(int master_size, std::vector<int> sizes,
                       PerfectSquareWeights weights = {});

  // Plain-text instance file: first line master size, then one square size
  // per line. Rejects instances whose areas do not add up to master^2.
  static PerfectSquareProblem load(const std::filesystem::path& file,
                                   PerfectSquareWeights weights = {});

  std::string name() const override { return "perfect-square"; }
  int variable_count() const override { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& base_values() const override { return sizes_; }
  Cost cost(const Configuration& config) const override;
  // Error of position i = its square's size when unplaced, else 0.
  void variable_errors(const Configuration& config, std::vector<Cost>& out) const override;
  bool validate(const Configuration& config) const override;
  std::unique_ptr<Evaluator> make_evaluator() const override;
  SolverParams default_params() const override;

  int master_size() const { return master_; }
  const PerfectSquareWeights& weights() const { return weights_; }

  Cost placement_cost(const PlacementResult& result) const;

 private:
  int master_;
  std::vector<int> sizes_;
  PerfectSquareWeights weights_;
};

// The five bundled instances (1..5); identical to the files under
// data/perfect_square/.
PerfectSquareProblem bundled_perfect_square(int instance_id,
                                            PerfectSquareWeights weights = {});

}  // namespace adsearch
