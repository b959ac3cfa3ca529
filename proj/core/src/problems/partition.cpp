#include "adsearch/problems/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace adsearch {

namespace {

// Sums and square-sums reach ~n^3; 64-bit throughout.
inline Cost sq(Cost v) { return v * v; }

std::pair<Cost, Cost> half_sums(const Configuration& config) {
  const std::size_t half = config.size() / 2;
  Cost sum = 0, sumsq = 0;
  for (std::size_t i = 0; i < half; ++i) {
    const Cost v = config[i];
    sum += v;
    sumsq += sq(v);
  }
  return {sum, sumsq};
}

class PartitionEvaluator final : public Evaluator {
 public:
  PartitionEvaluator(int n, Cost target_sum, Cost target_sq_sum)
      : n_(n), t1_(target_sum), t2_(target_sq_sum) {}

  Cost cost() const override { return cost_from(sum_a_, sumsq_a_); }

  Cost swap_cost(int i, int j) override {
    const int half = n_ / 2;
    const bool ia = i < half, ja = j < half;
    if (ia == ja) return cost();  // within-group swap: sums unchanged
    const Cost a = cfg_[static_cast<std::size_t>(ia ? i : j)];  // leaves group A
    const Cost b = cfg_[static_cast<std::size_t>(ia ? j : i)];  // enters group A
    return cost_from(sum_a_ - a + b, sumsq_a_ - sq(a) + sq(b));
  }

  void apply_swap(int i, int j) override {
    const int half = n_ / 2;
    const bool ia = i < half, ja = j < half;
    if (ia != ja) {
      const Cost a = cfg_[static_cast<std::size_t>(ia ? i : j)];
      const Cost b = cfg_[static_cast<std::size_t>(ia ? j : i)];
      sum_a_ += b - a;
      sumsq_a_ += sq(b) - sq(a);
    }
    std::swap(cfg_[static_cast<std::size_t>(i)], cfg_[static_cast<std::size_t>(j)]);
  }

  void variable_errors(std::vector<Cost>& out) const override {
    out.assign(static_cast<std::size_t>(n_), cost());
  }

 protected:
  void rebuild() override {
    auto [sum, sumsq] = half_sums(cfg_);
    sum_a_ = sum;
    sumsq_a_ = sumsq;
  }

 private:
  Cost cost_from(Cost sum_a, Cost sumsq_a) const {
    return std::abs(sum_a - t1_) + std::abs(sumsq_a - t2_);
  }

  int n_;
  Cost t1_, t2_;
  Cost sum_a_ = 0, sumsq_a_ = 0;
};

}  // namespace

Cost partition_cost(const Configuration& config) {
  auto [e1, e2] = partition_errors(config);
  return e1 + e2;
}

std::pair<Cost, Cost> partition_errors(const Configuration& config) {
  const Cost n = static_cast<Cost>(config.size());
  if (n == 0 || n % 8 != 0) throw InvalidInstance("partition needs n to be a multiple of 8");
  const Cost t1 = n * (n + 1) / 4;
  const Cost t2 = n * (n + 1) * (2 * n + 1) / 12;
  auto [sum, sumsq] = half_sums(config);
  return {std::abs(sum - t1), std::abs(sumsq - t2)};
}

PartitionProblem::PartitionProblem(int n) : n_(n) {
  if (n < 8 || n % 8 != 0) throw InvalidInstance("partition needs n to be a multiple of 8");
  values_.resize(static_cast<std::size_t>(n));
  std::iota(values_.begin(), values_.end(), 1);
  const Cost nn = n;
  target_sum_ = nn * (nn + 1) / 4;
  target_sq_sum_ = nn * (nn + 1) * (2 * nn + 1) / 12;
}

Cost PartitionProblem::cost(const Configuration& config) const {
  auto [e1, e2] = constraint_errors(config);
  return e1 + e2;
}

std::pair<Cost, Cost> PartitionProblem::constraint_errors(const Configuration& config) const {
  auto [sum, sumsq] = half_sums(config);
  return {std::abs(sum - target_sum_), std::abs(sumsq - target_sq_sum_)};
}

void PartitionProblem::variable_errors(const Configuration& config,
                                       std::vector<Cost>& out) const {
  out.assign(static_cast<std::size_t>(n_), cost(config));
}

void PartitionProblem::candidate_moves(const Configuration&, int culprit,
                                       std::vector<Move>& out) const {
  const int half = n_ / 2;
  out.clear();
  out.reserve(static_cast<std::size_t>(half));
  if (culprit < half) {
    for (int j = half; j < n_; ++j) out.push_back(Move{culprit, j});
  } else {
    for (int j = 0; j < half; ++j) out.push_back(Move{culprit, j});
  }
}

bool PartitionProblem::validate(const Configuration& config) const {
  if (static_cast<int>(config.size()) != n_) return false;
  Configuration sorted = config;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n_; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
  // Equal group sums and square sums, computed without the closed-form targets.
  Cost sum_a = 0, sum_b = 0, sq_a = 0, sq_b = 0;
  for (int i = 0; i < n_; ++i) {
    const Cost v = config[static_cast<std::size_t>(i)];
    if (i < n_ / 2) {
      sum_a += v;
      sq_a += v * v;
    } else {
      sum_b += v;
      sq_b += v * v;
    }
  }
  return sum_a == sum_b && sq_a == sq_b;
}

std::unique_ptr<Evaluator> PartitionProblem::make_evaluator() const {
  return std::make_unique<PartitionEvaluator>(n_, target_sum_, target_sq_sum_);
}

SolverParams PartitionProblem::default_params() const {
  SolverParams p = adsearch::default_params(n_);
  p.tabu_tenure = 3;
  p.reset_limit = 2;
  p.reset_percentage = 0.1;
  p.max_iterations = 4000LL * n_;
  p.max_restarts = 50;
  return p;
}

}  // namespace adsearch
