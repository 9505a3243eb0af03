#pragma once

#include <cstdint>

namespace reskit {

// splitmix64: tiny, seedable, bit-identical on every platform, trivially
// reproducible in other languages.  That determinism is the whole point —
// `random --seed S` must emit the same instance everywhere, forever.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [-9, 9]; the coefficient pool for random rational
  // instances.
  int64_t small_int() { return static_cast<int64_t>(next() % 19) - 9; }

  // Residue in [0, m).
  uint64_t below(uint64_t m) { return next() % m; }

private:
  uint64_t state_;
};

}  // namespace reskit
