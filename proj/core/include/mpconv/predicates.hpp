#pragma once

#include <cstddef>
#include <optional>

#include "mpconv/sequence.hpp"

namespace mpconv {

struct IndexPair {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

/// Answer of a decision problem plus, on NO (or YES for search-style problems
/// such as 3sumConv), one certificate.
template <class Witness>
struct Verdict {
  bool yes = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return yes; }
};

/// YES iff a[i] + b[j] <= c[i+j] for all i + j < n. On NO the witness is the
/// violating pair with the smallest i + j (then smallest i).
Verdict<IndexPair> check_upper_bound(const Sequence& a, const Sequence& b,
                                     const Sequence& c);

/// YES iff every k < n has some i + j = k with a[i] + b[j] >= c[k]. On NO the
/// witness is the smallest uncovered k.
Verdict<std::size_t> check_lower_bound(const Sequence& a, const Sequence& b,
                                       const Sequence& c);

/// YES iff a[i] + a[j] <= a[i+j] for all i + j < n. Witness as in
/// check_upper_bound.
Verdict<IndexPair> is_superadditive(const Sequence& a);

struct Normalized {
  Sequence sequence;
  Value shift = 0;  // C in a'[i] = C*i + a[i]
};

/// Maps a to a non-negative a' with the same superadditivity verdict:
/// a'[0] = 0, a'[i] = C*i + a[i], C = max|a[i]| + 1. a' is strictly increasing
/// whenever a is superadditive; otherwise it need not be.
/// Returns nullopt when a[0] > 0, which already refutes superadditivity.
std::optional<Normalized> normalize_nonneg_monotone(const Sequence& a);

}  // namespace mpconv
