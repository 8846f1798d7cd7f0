#pragma once

#include <cstdint>
#include <cmath>
#include <numbers>

namespace qinfo {

// Deterministic pseudo-random stream used for all seeded sampling. A fixed
// in-library generator (splitmix64) keeps output byte-identical across
// standard library implementations.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // standard normal via Box-Muller
  double next_gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = next_double(), u2 = next_double();
    while (u1 <= 0.0)
      u1 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Independent per-trial sub-seed so sweeps can be evaluated in any order.
inline std::uint64_t derive_subseed(std::uint64_t seed, std::uint64_t index) {
  RandomStream s(seed ^ (0xA24BAED4963EE407ULL * (index + 1)));
  return s.next_u64();
}

} // namespace qinfo
