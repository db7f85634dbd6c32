#pragma once

#include <vector>

#include "mpconv/convolution.hpp"
#include "mpconv/tree.hpp"

namespace mpconv {

/// Root sparsity vector (same contract as tree_sparsity_dp) computed with
/// (max,+)-convolutions only.
///
/// The tree is covered by spines: each spine starts at a head, always steps
/// into the child with the largest subtree, and ends at a leaf; the remaining
/// (light) children head their own spines. For a spine s_1..s_l let u^i be
/// the max-convolution of the sparsity vectors of the light children of s_i,
/// or (0) when there are none. The head's vector y^{1,l} is assembled by
/// halving the spine interval [a, b] at c = floor((a+b)/2):
///
///   u^{a,b} = u^{a,c} (+) u^{c+1,b}
///   y^{a,b}[k] = max(y^{a,c}[k],
///                    x(s_a..s_c) + (u^{a,c} (+) y^{c+1,b})[k - (c-a+1)])
///
/// with y^{a,a}[0] = 0 and y^{a,a}[k] = x(s_a) + u^a[k-1].
std::vector<Value> tree_sparsity_via_maxconv(
    const WeightedTree& tree, const ConvKernel& kernel = naive_kernel());

/// Spine heads in preorder; every node belongs to exactly one spine. Exposed
/// for tests of the decomposition itself.
std::vector<std::vector<std::size_t>> spine_decomposition(
    const WeightedTree& tree);

}  // namespace mpconv
