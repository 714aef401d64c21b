#pragma once

#include <cmath>
#include <cstdint>

namespace mistqueue {

// Deterministic 64-bit generator (splitmix64). Produces the same sequence on
// every platform, which keeps traces and simulation results reproducible
// bit-for-bit from a seed. Distribution helpers are implemented here instead
// of <random> because libstdc++/libc++ disagree on distribution algorithms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform in [0, n). n must be >= 1.
  std::uint64_t uniform_below(std::uint64_t n) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next_u64()) * n) >> 64);
  }

  // Knuth's product method; fine for the arrival rates used here (<= ~20).
  int poisson(double lambda) {
    const double limit = std::exp(-lambda);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > limit);
    return k - 1;
  }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Stable derivation of independent substream seeds from one master seed.
// Toggling one stochastic component of a run must not perturb the draws of
// the others, so each component owns a stream derived by tag.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  return detail::mix64(base + 0x9E3779B97F4A7C15ull * (tag + 1));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag_a, std::uint64_t tag_b) {
  return derive_seed(derive_seed(base, tag_a), tag_b);
}

}  // namespace mistqueue
