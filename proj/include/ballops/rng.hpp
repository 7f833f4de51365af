#pragma once

#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace ballops {

// Small deterministic PRNG (splitmix64). Not std::mt19937 + std::shuffle on
// purpose: their sequences are implementation-defined and reports must be
// byte-stable across platforms.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n) by rejection
  uint64_t below(uint64_t n) {
    check_internal(n > 0, "Rng::below(0)");
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return v % n;
  }

  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next_u64() & 1u) != 0; }

  // random p/q with p in [-span, span], q in [1, max_den]
  Rational rational(int span, int max_den) {
    const int num = range(-span, span);
    const int den = range(1, max_den);
    return Rational(num, den);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      const size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

private:
  uint64_t state_;
};

}  // namespace ballops
