#pragma once

#include <cstdint>

namespace forcing_lab {

/// splitmix64; fixed algorithm so seeded runs are byte-identical across
/// platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n).
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<uint64_t>(n)); }

  bool chance(int numerator, int denominator) { return below(denominator) < numerator; }

 private:
  uint64_t state_;
};

}  // namespace forcing_lab
