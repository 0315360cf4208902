#pragma once

#include <cstdint>

namespace gridramsey {

// Splittable deterministic generator built on splitmix64. Children derived
// by key never overlap with the parent stream, so parallel and sequential
// sampling reproduce exactly from the same user seed on any platform.
class SplitRng {
 public:
  explicit SplitRng(uint64_t seed) : state_(mix(seed ^ kGamma)) {}

  uint64_t next() {
    state_ += kGamma;
    return mix(state_);
  }

  // Unbiased draw in [0, bound) via rejection; bound >= 1.
  uint64_t next_below(uint64_t bound) {
    uint64_t threshold = -bound % bound;  // 2^64 mod bound
    while (true) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Integer in [lo, hi] inclusive.
  int64_t uniform(int64_t lo, int64_t hi) {
    return lo + int64_t(next_below(uint64_t(hi - lo + 1)));
  }

  // Independent child stream tagged by key.
  SplitRng split(uint64_t key) const {
    SplitRng child(0);
    child.state_ = mix(state_ ^ mix(key + kGamma));
    return child;
  }

 private:
  static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static uint64_t mix(uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
  }

  uint64_t state_;
};

}  // namespace gridramsey
