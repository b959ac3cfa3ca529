#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace adsearch {

// Fixed, portable 64-bit generator (xoshiro256**) seeded through splitmix64.
// Every stochastic choice in the solver flows through one of these, so a run
// is fully determined by its seed on any platform.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  std::uint64_t operator()() { return next(); }

  // Uniform integer in [0, bound), bound > 0. Threshold rejection, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~std::uint64_t{0}; }

 private:
  std::array<std::uint64_t, 4> s_;
};

// Deterministic seed for a numbered substream of a master seed. Distinct
// streams give statistically independent generators; worker i of a parallel
// group runs on stream i, so its trajectory does not depend on how many
// other workers exist.
std::uint64_t derive_stream(std::uint64_t master_seed, std::uint64_t stream);

// In-place Fisher–Yates shuffle driven by our generator (std::shuffle is not
// specified bit-for-bit across standard libraries; this one is).
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace adsearch
