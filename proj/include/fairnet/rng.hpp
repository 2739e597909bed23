#pragma once

#include <cmath>
#include <cstdint>

namespace fairnet {

// SplitMix64: the project-wide seedable generator. Pure function of the
// 64-bit counter state, so identical seeds give identical streams on any
// platform. Substreams are derived with mix().
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), rejection-sampled so the result is
  // unbiased for every bound.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t mask = ~0ULL >> __builtin_clzll(bound - 1 | 1);
    for (;;) {
      std::uint64_t v = next() & mask;
      if (v < bound) return v;
    }
  }

  // Standard normal via Box-Muller (uses two draws per call).
  double normal() {
    double u1;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  // Deterministic substream derivation: hash two words into a fresh seed.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    SplitMix64 g(a ^ (0x9e3779b97f4a7c15ULL + (b << 1)));
    g.next();
    return g.next() ^ b;
  }

 private:
  std::uint64_t state_;
};

}  // namespace fairnet
