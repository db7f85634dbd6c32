#pragma once

// Instance transformations between the problems of the family. Every
// reduce_* function returns the target instances together with the rule that
// maps target answers back to the source answer; the *_via_* helpers run the
// reference solver on the target side and apply that rule.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mpconv/convolution.hpp"
#include "mpconv/knapsack.hpp"
#include "mpconv/necklace.hpp"
#include "mpconv/predicates.hpp"
#include "mpconv/problem.hpp"
#include "mpconv/sequence.hpp"

namespace mpconv {

struct SequencePair {
  Sequence first;
  Sequence second;
  friend bool operator==(const SequencePair&, const SequencePair&) = default;
};

struct SequenceTriple {
  Sequence a;
  Sequence b;
  Sequence c;
  friend bool operator==(const SequenceTriple&,
                         const SequenceTriple&) = default;
};

enum class InterpretKind {
  kImmediate,              // no target instance; the verdict is fixed
  kSameValue,              // source optimum = target optimum
  kEqualsThreshold,        // source YES iff target value == threshold
  kSameDecision,           // source verdict = target verdict
  kAnyYesRefutes,          // source NO iff some target instance says YES
  kBelowThresholdRefutes,  // source NO iff target value < threshold
  kReadWindow,             // source[k] = target[threshold + k], k < count
  kBoundedByNegation,      // source YES iff bounds[k] <= -target[k] for all k
};

std::string_view to_string(InterpretKind kind);

/// How target answers translate back to the source problem. Each decide /
/// read overload is total over its answer type and throws InvalidInput when
/// called for a rule of a different kind.
struct Interpretation {
  InterpretKind kind = InterpretKind::kImmediate;
  bool immediate_verdict = true;
  Value threshold = 0;
  std::size_t count = 0;
  std::vector<Value> bounds;

  bool decide() const;
  bool decide(Value target_value) const;
  bool decide(std::span<const bool> target_verdicts) const;
  bool decide_from_vector(std::span<const Value> target) const;
  Value value(Value target_value) const;
  std::vector<Value> read(std::span<const Value> target) const;

  friend bool operator==(const Interpretation&,
                         const Interpretation&) = default;
};

template <class Instance>
struct ReductionOutcome {
  ProblemTag source;
  ProblemTag target;
  std::vector<Instance> instances;
  Interpretation interpret;
  std::string blowup_note;
  /// Largest |value| written into any target instance.
  Value peak_magnitude = 0;
};

// Unbounded knapsack -> 0/1 knapsack.

/// Same capacity, items (2^j w, 2^j v) for 0 <= j <= floor(log2 t), dropping
/// copies heavier than t. The target optimum at t equals the source optimum.
/// Throws InvalidInput when t < 1 or on a zero-weight item of positive value.
ReductionOutcome<KnapsackInstance> reduce_unbounded_to_01(
    const KnapsackInstance& inst);

Value unbounded_via_01(const KnapsackInstance& inst);

// SuperAdditivity -> unbounded knapsack.

/// After normalize_nonneg_monotone: D = (2n-1) max a' + 1, which no packing of
/// light items alone can reach; light items (i, a'[i]) for
/// i = 1..n-1, heavy items (2n-1-i, D - a'[i]) for i = 0..n-1, capacity
/// 2n-1. a is superadditive iff the optimum equals D (it is never below).
/// Immediate NO when a[0] > 0, immediate YES when n = 1.
ReductionOutcome<KnapsackInstance> reduce_superadditivity_to_unbounded(
    const Sequence& a);

bool superadditive_via_unbounded(const Sequence& a);

// MaxConv UpperBound -> SuperAdditivity.

/// Builds e of length 4n with e[i] = 0, e[n+i] = K + a'[i],
/// e[2n+i] = 4K + b'[i], e[3n+i] = 5K + c'[i], where a', b', c' are the
/// inputs shifted by C + D*i (2C for c), C = W+1, D = 2W+1, and K is the
/// largest shifted value. The bound holds iff e is superadditive.
ReductionOutcome<Sequence> reduce_upperbound_to_superadditivity(
    const Sequence& a, const Sequence& b, const Sequence& c);

using SuperadditivityTester = std::function<bool(const Sequence&)>;

bool upper_bound_via_superadditivity(
    const Sequence& a, const Sequence& b, const Sequence& c,
    const SuperadditivityTester& tester = [](const Sequence& e) {
      return is_superadditive(e).yes;
    });

// MCSP -> MaxConv.

/// b = prefix sums of a (length n) then -D, c[k] = -(sum of the first n-k
/// elements) for k <= n then -D, both of length 2n, D = 2 (sum |a| + 1). The
/// answer for window length k is max_conv(b, c)[n + k - 1].
ReductionOutcome<SequencePair> reduce_mcsp_to_maxconv(const Sequence& a);

Sequence mcsp_via_maxconv(const Sequence& a,
                          const ConvKernel& kernel = naive_kernel());

// SuperAdditivity -> MCSP.

using McspSolver = std::function<Sequence(const Sequence&)>;

/// Target is -b with b[i] = a[i+1] - a[i]; a is superadditive iff
/// a[k] <= -MCSP(-b)[k-1] for k = 1..n-1. Immediate NO when a[0] > 0,
/// immediate YES when n = 1.
ReductionOutcome<Sequence> reduce_superadditivity_to_mcsp(const Sequence& a);

bool superadditive_via_mcsp(const Sequence& a, const McspSolver& mcsp);
bool superadditive_via_mcsp(const Sequence& a);

// MaxConv LowerBound -> l-infinity Necklace Alignment.

inline constexpr Value kNecklaceCombinationLength = 10;

/// Two 2n-bead necklaces on a circle of length 2B. The bound fails iff the
/// doubled alignment cost is below B - B1 (the threshold).
ReductionOutcome<NecklaceInstance> reduce_lowerbound_to_necklace(
    const Sequence& a, const Sequence& b, const Sequence& c);

bool lower_bound_via_necklace(const Sequence& a, const Sequence& b,
                              const Sequence& c);

// MaxConv UpperBound -> 3sumConv.

/// Bit-prefix encoding of a[i] + b[j] > c[i+j] as 2w equality instances,
/// w = floor(log2 W') + 1, W' the largest value after shifting the inputs
/// non-negative. The bound fails iff some instance has a solution.
ReductionOutcome<SequenceTriple> reduce_upperbound_to_3sumconv(
    const Sequence& a, const Sequence& b, const Sequence& c);

bool upper_bound_via_3sumconv(const Sequence& a, const Sequence& b,
                              const Sequence& c);

}  // namespace mpconv
