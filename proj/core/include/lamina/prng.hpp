#pragma once

#include <cstdint>

#include "lamina/rational.hpp"

namespace lamina {

// splitmix64: tiny, portable, and stable across platforms, so seeded runs
// are byte-identical everywhere
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t bound = ~0ull - (~0ull % n);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= bound);
    return v % n;
  }

  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // small nonzero rational with numerator in [-max_num, max_num] and
  // denominator in [1, max_den]
  Rational small_rational(long max_num, long max_den) {
    long num = 0;
    while (num == 0) num = range(-max_num, max_num);
    return Rational(num, range(1, max_den));
  }

 private:
  std::uint64_t state_;
};

}  // namespace lamina
