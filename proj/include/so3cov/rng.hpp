#pragma once

#include <cstdint>

#include "so3cov/rational.hpp"

namespace so3cov {

// Small deterministic generator (splitmix64). Fixed seeds keep every
// randomized suite byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // small rational with numerator in [-bound, bound] and denominator in [1, dbound]
  Rational small_rational(long bound = 9, long dbound = 4) {
    return rational(range(-bound, bound), range(1, dbound));
  }

 private:
  std::uint64_t state_;
};

}  // namespace so3cov
