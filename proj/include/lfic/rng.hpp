#pragma once

#include <cstdint>

namespace lfic {

// splitmix64. Used instead of <random> engines/distributions so that seeded
// fixtures and synthetic images are identical on every platform and stdlib.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double next_range(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  // uniform in [0,bound)
  uint32_t next_below(uint32_t bound) {
    return static_cast<uint32_t>((next() >> 32) % bound);
  }

private:
  uint64_t state_;
};

} // namespace lfic
