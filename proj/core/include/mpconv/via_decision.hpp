#pragma once

// Full (max,+)-convolution recovered from a MaxConv UpperBound decision
// oracle: prefix binary search finds one violated index, interval pairs with
// masking find all of them, and a per-coordinate binary search on c
// converges to the convolution.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "mpconv/sequence.hpp"

namespace mpconv {

/// Answers "a[i] + b[j] <= c[i+j] for all i + j < n?" on equal-length input.
using UpperBoundOracle =
    std::function<bool(const Sequence& a, const Sequence& b, const Sequence& c)>;

/// check_upper_bound wrapped as an oracle.
UpperBoundOracle direct_upper_bound_oracle();

/// Counters for the call-accounting invariants.
struct DecisionStats {
  std::size_t oracle_calls = 0;
  std::size_t detect_single_calls = 0;
  std::size_t rounds = 0;
  /// detect_single calls made by the most expensive detect_violations run,
  /// and how many indices that run marked.
  std::size_t max_round_single_calls = 0;
  std::size_t max_round_marked = 0;
};

struct ViolationReport {
  /// violated[k] iff c[k] < max_{i+j=k} a[i] + b[j].
  std::vector<bool> violated;
};

/// Smallest k carrying a violated constraint, or nullopt if the bound holds.
/// One oracle call on the whole input, then a binary search over prefix
/// lengths: at most ceil(log2 n) + 1 calls.
std::optional<std::size_t> detect_single(const Sequence& a, const Sequence& b,
                                         const Sequence& c,
                                         const UpperBoundOracle& oracle,
                                         DecisionStats* stats = nullptr);

/// Every violated index. Splits [0, n) into m = ceil(sqrt n) intervals of
/// length s = ceil(n / m); for each interval pair (x, y) it repeatedly runs
/// detect_single on the length-2s window starting at (x + y) s and masks
/// each reported index with K = 2 n W + 1 in a private copy of c. Indices
/// past n read as K; positions past the end of a short interval are padded
/// with a value too small to violate anything.
ViolationReport detect_violations(const Sequence& a, const Sequence& b,
                                  const Sequence& c,
                                  const UpperBoundOracle& oracle,
                                  DecisionStats* stats = nullptr);

ViolationReport detect_violations(const Sequence& a, const Sequence& b,
                                  const Sequence& c);

/// max_conv(a, b) truncated to n entries, using only oracle answers. Keeps
/// lo_k <= answer_k <= hi_k, probes c[k] = floor((lo_k + hi_k) / 2) each round
/// and narrows on the reported violations until every interval is a point.
Sequence max_conv_via_upperbound(const Sequence& a, const Sequence& b,
                                 const UpperBoundOracle& oracle,
                                 DecisionStats* stats = nullptr);

Sequence max_conv_via_upperbound(const Sequence& a, const Sequence& b);

}  // namespace mpconv
