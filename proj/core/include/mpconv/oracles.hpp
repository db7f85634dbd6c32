#pragma once

// Reference solvers. Each one is a direct enumeration or textbook DP that
// shares no code with the convolution kernels, so reductions can be checked
// against them.

#include "mpconv/knapsack.hpp"
#include "mpconv/necklace.hpp"
#include "mpconv/predicates.hpp"
#include "mpconv/sequence.hpp"
#include "mpconv/tree.hpp"

namespace mpconv {

/// out[k-1] = largest sum of k consecutive elements, k = 1..n.
Sequence mcsp_brute(const Sequence& a);

/// YES iff a[i] + b[j] = c[i+j] for some i + j < n; the witness is the first
/// such pair in (i+j, i) order.
Verdict<IndexPair> three_sum_conv_brute(const Sequence& a, const Sequence& b,
                                        const Sequence& c);

}  // namespace mpconv
