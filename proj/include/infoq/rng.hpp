#pragma once

#include <cstdint>
#include <random>

namespace infoq {

/// mt19937_64 seeded through seed_seq{seed, stream...}. Conversions to
/// doubles and bounded integers are written out here so results do not
/// depend on the standard library's distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0);

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11U) * 0x1.0p-53; }

  /// Uniform in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace infoq
