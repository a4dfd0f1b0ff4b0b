#pragma once

#include <cstdint>

#include "babel/lexring.hpp"

namespace babel {

// splitmix64 with explicit rejection sampling, so that streams are identical
// on every platform and standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  // Independent stream for sample `index` of a run seeded with `seed`.
  static Rng derive(uint64_t seed, uint64_t stream, uint64_t index) {
    Rng r(seed ^ (stream * 0x9E3779B97F4A7C15ULL));
    r.next();
    r.s_ ^= index * 0xD1B54A32D192ED03ULL;
    r.next();
    return r;
  }

  uint64_t next() {
    uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() >> 63) != 0; }

  // Rational num/den with num in [-nmax, nmax], den in [1, dmax].
  Q rational(long nmax, long dmax) {
    Q r(range(-nmax, nmax), range(1, dmax));
    r.canonicalize();
    return r;
  }

 private:
  uint64_t s_;
};

}  // namespace babel
