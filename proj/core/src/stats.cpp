#include "adsearch/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace adsearch {

double trimmed_mean(const std::vector<double>& samples) {
  if (samples.size() < 3)
    throw TooFewSamples("trimmed mean needs at least 3 samples, got " +
                        std::to_string(samples.size()));
  const double sum = std::accumulate(samples.begin(), samples.end(), 0.0);
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  return (sum - *lo - *hi) / static_cast<double>(samples.size() - 2);
}

double sample_stddev(const std::vector<double>& samples) {
  const std::size_t n = samples.size();
  if (n < 2) return 0.0;
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
                      static_cast<double>(n);
  double acc = 0.0;
  for (const double s : samples) acc += (s - mean) * (s - mean);
  return std::sqrt(acc / static_cast<double>(n - 1));
}

StatsSummary summarize(const std::vector<double>& samples) {
  StatsSummary out;
  out.samples = samples;
  out.trimmed_mean = trimmed_mean(samples);
  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  out.best = *lo;
  out.worst = *hi;
  out.stddev = sample_stddev(samples);
  return out;
}

std::vector<SpeedupRow> speedup_table(const std::map<int, StatsSummary>& by_workers) {
  const auto baseline = by_workers.find(1);
  if (baseline == by_workers.end())
    throw MissingBaseline("speedup table needs a 1-worker baseline row");

  std::vector<SpeedupRow> rows;
  rows.reserve(by_workers.size());
  for (const auto& [workers, stats] : by_workers) {  // std::map iterates ascending
    SpeedupRow row;
    row.workers = workers;
    row.stats = stats;
    row.stats.speedup_vs_baseline = baseline->second.trimmed_mean / stats.trimmed_mean;
    row.worst_case_speedup = baseline->second.worst / stats.worst;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace adsearch
