#include "adsearch/problems/perfect_square.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

namespace adsearch {

PlacementResult greedy_place(const Configuration& square_order, int master_size) {
  struct Seg {
    int x, width, height;
  };
  // Skyline: left-to-right segments covering [0, master); adjacent segments
  // always differ in height.
  std::vector<Seg> sky{{0, master_size, 0}};
  PlacementResult result;
  result.placed.reserve(square_order.size());

  std::size_t idx = 0;
  for (; idx < square_order.size(); ++idx) {
    const int s = square_order[idx];
    // Lowest slot, then leftmost.
    std::size_t best = 0;
    for (std::size_t t = 1; t < sky.size(); ++t)
      if (sky[t].height < sky[best].height) best = t;
    const Seg slot = sky[best];
    if (s > slot.width || slot.height + s > master_size) break;  // does not fit: stop

    result.placed.push_back(Placement{s, slot.x, slot.height});
    if (s == slot.width) {
      sky[best].height += s;
    } else {
      sky[best] = Seg{slot.x, s, slot.height + s};
      sky.insert(sky.begin() + static_cast<std::ptrdiff_t>(best) + 1,
                 Seg{slot.x + s, slot.width - s, slot.height});
    }
    // Merge equal-height neighbours.
    for (std::size_t t = 0; t + 1 < sky.size();) {
      if (sky[t].height == sky[t + 1].height) {
        sky[t].width += sky[t + 1].width;
        sky.erase(sky.begin() + static_cast<std::ptrdiff_t>(t) + 1);
      } else {
        ++t;
      }
    }
  }

  for (; idx < square_order.size(); ++idx) result.unplaced.push_back(square_order[idx]);
  for (const Seg& seg : sky)
    if (seg.height < master_size)
      result.open_slots.push_back(OpenSlot{seg.x, seg.height, seg.width, master_size - seg.height});
  return result;
}

namespace {

class PerfectSquareEvaluator final : public Evaluator {
 public:
  PerfectSquareEvaluator(const PerfectSquareProblem& problem) : problem_(problem) {}

  Cost cost() const override { return cost_; }

  Cost swap_cost(int i, int j) override {
    if (i == j) return cost_;
    std::swap(cfg_[static_cast<std::size_t>(i)], cfg_[static_cast<std::size_t>(j)]);
    const PlacementResult r = greedy_place(cfg_, problem_.master_size());
    std::swap(cfg_[static_cast<std::size_t>(i)], cfg_[static_cast<std::size_t>(j)]);
    return problem_.placement_cost(r);
  }

  void variable_errors(std::vector<Cost>& out) const override {
    out.assign(cfg_.size(), 0);
    for (std::size_t p = placed_count_; p < cfg_.size(); ++p)
      out[p] = cfg_[p];  // unplaced squares carry their size
  }

 protected:
  void rebuild() override {
    const PlacementResult r = greedy_place(cfg_, problem_.master_size());
    placed_count_ = r.placed.size();
    cost_ = problem_.placement_cost(r);
  }

 private:
  const PerfectSquareProblem& problem_;
  std::size_t placed_count_ = 0;
  Cost cost_ = 0;
};

struct BundledInstance {
  int master;
  std::vector<int> sizes;
};

// Instance 1 is the classic order-21 perfect squared square (side 112).
// Instances 2-5 are synthetic: they match the classic catalogue's master
// size, square count and largest element, and their areas sum exactly to
// the master area. Instances 2 and 5 admit a known tiling by construction;
// see scripts/square_instance_gen.cpp and data/perfect_square/.
const BundledInstance& bundled_data(int id) {
  static const std::vector<BundledInstance> instances = {
      {112, {2, 4, 6, 7, 8, 9, 11, 15, 16, 17, 18, 19, 24, 25, 27, 29, 33, 35, 37, 42, 50}},
      {228, {9, 9, 9, 12, 12, 12, 12, 12, 12, 27, 33, 33, 36, 57, 57, 57, 57, 63, 66, 72, 72, 72,
             99}},
      {326, {2, 3, 4, 6, 7, 11, 15, 16, 20, 25, 29, 30, 41, 60, 66, 69, 73, 80, 87, 96, 102, 117,
             125, 142}},
      {479, {5, 12, 14, 19, 30, 37, 39, 44, 47, 49, 51, 66, 74, 82, 99, 107, 118, 119, 135, 149,
             154, 164, 168, 175}},
      {524, {4, 4, 4, 4, 8, 8, 12, 12, 20, 20, 32, 32, 52, 52, 84, 84, 84, 84, 152, 152, 152, 152,
             220, 220, 220}},
  };
  if (id < 1 || id > static_cast<int>(instances.size()))
    throw InvalidInstance("bundled perfect-square instance id must be 1..5");
  return instances[static_cast<std::size_t>(id - 1)];
}

}  // namespace

PerfectSquareProblem::PerfectSquareProblem(int master_size, std::vector<int> sizes,
                                           PerfectSquareWeights weights)
    : master_(master_size), sizes_(std::move(sizes)), weights_(weights) {
  if (master_ < 1) throw InvalidInstance("master square size must be >= 1");
  if (sizes_.empty()) throw InvalidInstance("instance has no squares");
  long long area = 0;
  for (const int s : sizes_) {
    if (s < 1) throw InvalidInstance("square sizes must be >= 1");
    if (s > master_) throw InvalidInstance("square larger than the master square");
    area += static_cast<long long>(s) * s;
  }
  if (area != static_cast<long long>(master_) * master_)
    throw InvalidInstance("square areas must add up to the master square exactly");
}

PerfectSquareProblem PerfectSquareProblem::load(const std::filesystem::path& file,
                                                PerfectSquareWeights weights) {
  std::ifstream in(file);
  if (!in) throw InvalidInstance("cannot open instance file: " + file.string());
  int master = 0;
  if (!(in >> master)) throw InvalidInstance("instance file missing master size");
  std::vector<int> sizes;
  int s = 0;
  while (in >> s) sizes.push_back(s);
  return PerfectSquareProblem(master, std::move(sizes), weights);
}

Cost PerfectSquareProblem::placement_cost(const PlacementResult& r) const {
  if (r.complete()) return 0;
  Cost unplaced_count = static_cast<Cost>(r.unplaced.size());
  Cost largest_unplaced = 0;
  for (const int s : r.unplaced) largest_unplaced = std::max<Cost>(largest_unplaced, s);
  Cost height_sum = 0, height_max = 0, width_sum = 0;
  for (const OpenSlot& slot : r.open_slots) {
    height_sum += slot.height;
    height_max = std::max<Cost>(height_max, slot.height);
    width_sum += slot.width;
  }
  return weights_.unplaced_count * unplaced_count +
         weights_.largest_unplaced * largest_unplaced +
         weights_.slot_height_sum * height_sum + weights_.slot_height_max * height_max +
         weights_.slot_width_sum * width_sum;
}

Cost PerfectSquareProblem::cost(const Configuration& config) const {
  return placement_cost(greedy_place(config, master_));
}

void PerfectSquareProblem::variable_errors(const Configuration& config,
                                           std::vector<Cost>& out) const {
  const PlacementResult r = greedy_place(config, master_);
  out.assign(config.size(), 0);
  for (std::size_t p = r.placed.size(); p < config.size(); ++p) out[p] = config[p];
}

bool PerfectSquareProblem::validate(const Configuration& config) const {
  if (config.size() != sizes_.size()) return false;
  Configuration a = config, b = sizes_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;

  const PlacementResult r = greedy_place(config, master_);
  if (!r.complete()) return false;
  // Geometric re-check of the claimed placement: inside the master square,
  // pairwise non-overlapping, and exactly covering by area.
  long long area = 0;
  for (const Placement& p : r.placed) {
    if (p.x < 0 || p.y < 0 || p.x + p.size > master_ || p.y + p.size > master_) return false;
    area += static_cast<long long>(p.size) * p.size;
  }
  if (area != static_cast<long long>(master_) * master_) return false;
  for (std::size_t i = 0; i < r.placed.size(); ++i) {
    for (std::size_t j = i + 1; j < r.placed.size(); ++j) {
      const Placement& p = r.placed[i];
      const Placement& q = r.placed[j];
      const bool disjoint = p.x + p.size <= q.x || q.x + q.size <= p.x ||
                            p.y + p.size <= q.y || q.y + q.size <= p.y;
      if (!disjoint) return false;
    }
  }
  return true;
}

std::unique_ptr<Evaluator> PerfectSquareProblem::make_evaluator() const {
  return std::make_unique<PerfectSquareEvaluator>(*this);
}

SolverParams PerfectSquareProblem::default_params() const {
  const int n = variable_count();
  SolverParams p = adsearch::default_params(n);
  // Tuned on the bundled instances: placement orders benefit from frequent
  // short restarts plus moderate kicks, so the tenure stays above the reset
  // limit (otherwise the reset trigger can never fire) and each restart is
  // capped at a modest iteration budget.
  p.tabu_tenure = 8;
  p.reset_limit = 5;
  p.reset_percentage = 0.1;
  p.max_iterations = 20000;
  p.max_restarts = 100000;
  return p;
}

PerfectSquareProblem bundled_perfect_square(int instance_id, PerfectSquareWeights weights) {
  const BundledInstance& data = bundled_data(instance_id);
  return PerfectSquareProblem(data.master, data.sizes, weights);
}

}  // namespace adsearch
