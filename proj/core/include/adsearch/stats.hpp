#pragma once

#include <map>
#include <stdexcept>
#include <vector>

namespace adsearch {

// Trimmed statistics need at least 3 samples (trimming removes 2).
struct TooFewSamples : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Speedups are relative to the 1-worker row; without it they are undefined.
struct MissingBaseline : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Mean after removing exactly one minimum and one maximum sample.
double trimmed_mean(const std::vector<double>& samples);

// Sample standard deviation (n-1 denominator) over all samples, untrimmed.
// Zero for fewer than two samples.
double sample_stddev(const std::vector<double>& samples);

struct StatsSummary {
  std::vector<double> samples;
  double trimmed_mean = 0.0;
  double best = 0.0;   // minimum sample
  double worst = 0.0;  // maximum sample
  double stddev = 0.0;
  double speedup_vs_baseline = 1.0;  // filled by speedup_table
};

StatsSummary summarize(const std::vector<double>& samples);

struct SpeedupRow {
  int workers = 0;
  StatsSummary stats;
  double worst_case_speedup = 1.0;  // worst(1) / worst(k)
};

// Rows ascending by worker count; speedup(k) = trimmed_mean(1)/trimmed_mean(k).
std::vector<SpeedupRow> speedup_table(const std::map<int, StatsSummary>& by_workers);

}  // namespace adsearch
