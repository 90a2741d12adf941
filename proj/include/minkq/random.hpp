#pragma once

// Seeded pseudo-randomness with a fixed contract so that every randomized
// instance can be replayed from (suite, seed, index):
//   * per-instance seeds are derived with SplitMix64 from (seed, stream, index);
//   * the generator is the SplitMix64 sequence itself: 64 bits of state,
//     advanced by the golden-ratio increment and mixed on output;
//   * doubles use the top 53 bits, normals use Box-Muller. No std::
//     distributions are involved, so streams are identical across toolchains.

#include <cmath>
#include <cstdint>

#include "minkq/polytope.hpp"

namespace minkq {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    const std::uint64_t out = splitmix64(state_);
    state_ += 0x9e3779b97f4a7c15ULL;
    return out;
  }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Vec3 in_cube(double half = 1.0) {
    const double x = uniform(-half, half);
    const double y = uniform(-half, half);
    const double z = uniform(-half, half);
    return {x, y, z};
  }

  Vec3 on_sphere() {
    for (;;) {
      const double x = normal();
      const double y = normal();
      const double z = normal();
      const Vec3 v(x, y, z);
      const double n = v.norm();
      if (n > 1e-6) return v / n;
    }
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::uint64_t state_;
};

}  // namespace minkq
