#pragma once

#include <cstdint>
#include <random>

namespace mpconv {

/// Deterministic, platform-independent random source.
///
/// Draws come from std::mt19937_64, whose output sequence is fixed by the
/// standard; bounded integers use rejection sampling instead of
/// std::uniform_int_distribution, whose algorithm is implementation-defined.
/// Child streams are derived with the SplitMix64 finalizer, so task i of a
/// parallel loop sees the same numbers as iteration i of a serial loop.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

  /// Independent stream for sub-task `index`; does not advance this one.
  Rng child(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace mpconv
