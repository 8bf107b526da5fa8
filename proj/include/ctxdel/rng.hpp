#pragma once

// Deterministic seeded RNG used by every randomized component.
//
// Generator: splitmix64 (Steele/Lea/Flood finalizer chain), stream version 1.
// Output is a pure function of the 64-bit seed and the draw index, so results
// are identical across platforms and runs.

#include <cstdint>

namespace ctxdel {

class SplitMix64 {
 public:
  static constexpr int kVersion = 1;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  int bit() { return static_cast<int>(next() >> 63); }

  // Bernoulli(p) using a 53-bit uniform; p in [0,1].
  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return u < p;
  }

 private:
  std::uint64_t state_;
};

}  // namespace ctxdel
