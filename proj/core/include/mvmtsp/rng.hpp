#pragma once

#include <cstdint>
#include <random>

#include "mvmtsp/types.hpp"

namespace mvmtsp {

// Seeded generator with hand-rolled sampling so draws are identical across
// standard libraries (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t u64() { return eng_(); }

  // Uniform in [0, n) by rejection; n > 0.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t d;
    do d = eng_();
    while (d >= limit);
    return d % n;
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  // Uniform in [0, n) for arbitrary-precision n > 0.
  Big big_below(const Big& n) {
    unsigned bits = 0;
    for (Big t = n; t > 0; t >>= 1) ++bits;
    while (true) {
      Big d = 0;
      for (unsigned got = 0; got < bits; got += 64) d = (d << 64) | eng_();
      d >>= (64 - bits % 64) % 64;
      if (d < n) return d;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace mvmtsp
