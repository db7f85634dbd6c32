#pragma once

#include <cstddef>
#include <vector>

#include "mpconv/sequence.hpp"

namespace mpconv {

/// Two necklaces of N beads each on a circle of the given length. Positions
/// are non-decreasing and lie in [0, circle_length]; beads may coincide.
struct NecklaceInstance {
  std::vector<Value> x;
  std::vector<Value> y;
  Value circle_length = 1;

  void validate() const;

  friend bool operator==(const NecklaceInstance&,
                         const NecklaceInstance&) = default;
};

/// Forward distance from x[i] to y[j] in a matching that pairs i with j:
/// y[j] - x[i], plus the circle length when the matching wraps (j < i).
Value forward_distance(const NecklaceInstance& inst, std::size_t i,
                       std::size_t j);

/// Twice the optimal l-infinity alignment cost, min over offsets k of
/// M_k = max_i d(i, (i+k) mod N) - min_i d(i, (i+k) mod N). Only
/// non-crossing matchings are enumerated; the best shift for offset k costs
/// M_k / 2, so the doubled value is always an integer. O(N^2).
Value necklace_linf_brute(const NecklaceInstance& inst);

}  // namespace mpconv
