#include "mpconv/rng.hpp"

#include <limits>

#include "mpconv/sequence.hpp"

namespace mpconv {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("Rng::below: bound must be positive");
  // Largest multiple of bound representable; draws above it are rejected.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return r % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidInput("Rng::between: empty range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::int64_t>(engine_());
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   below(span + 1));
}

Rng Rng::child(std::uint64_t index) const {
  return Rng(mix64(seed_ ^ mix64(index + 1)));
}

}  // namespace mpconv
