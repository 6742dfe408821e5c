#pragma once

// Seeded random source with a platform-independent integer mapping.
// std::uniform_int_distribution is implementation-defined, so values are
// derived from the raw mt19937_64 stream (which the standard pins down).

#include <bivar/scalar.hpp>

#include <cstdint>
#include <random>

namespace bivar {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Combines a base seed with a stream index (e.g. a trial number).
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return Rng(z ^ (z >> 31));
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

  /// p/q with |p| <= num_range and 1 <= q <= den_range.
  Scalar rational(long num_range, long den_range) {
    Scalar s(uniform(-num_range, num_range), uniform(1, den_range));
    s.canonicalize();
    return s;
  }

  Scalar nonzero_rational(long num_range, long den_range) {
    Scalar s;
    do {
      s = rational(num_range, den_range);
    } while (sgn(s) == 0);
    return s;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bivar
