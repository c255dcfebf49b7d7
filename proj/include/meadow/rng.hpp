#pragma once

#include <cstdint>
#include <random>

namespace meadow {

/// Seeded RNG behind every randomized facility. mt19937_64 is fully
/// specified by the standard, so sequences are identical on every
/// platform; bounded draws use plain modulo (the bias is irrelevant at
/// the ranges we draw from).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
  long range(long lo, long hi) {  // inclusive bounds
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool one_in(unsigned n) { return below(n) == 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace meadow
