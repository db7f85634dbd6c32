#pragma once

// Randomized 0/1 knapsack on top of bounded (max,+)-convolution: layer
// splitting by weight, random partitions (color coding) and binary-tree joins
// of value profiles. Every output entry is achievable by some item subset
// (one-sided error); each entry is optimal with probability >= 1 - delta.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "mpconv/convolution.hpp"
#include "mpconv/knapsack.hpp"
#include "mpconv/rng.hpp"

namespace mpconv {

struct RandConfig {
  double delta = 0.05;
  std::uint64_t seed = 0;
  std::string kernel = "naive";

  /// Throws InvalidInput unless 0 < delta <= 1/4 and the kernel exists.
  void validate() const;
};

/// Profile join restricted to capacities 0..limit. Inputs shorter than
/// limit + 1 are extended with their last entry (a solution of weight <= c
/// also fits every larger capacity).
ValueProfile join_profiles(const ValueProfile& p, const ValueProfile& q,
                           std::size_t limit,
                           const ConvKernel& kernel = naive_kernel());

/// Profile of taking at most one item of `part`:
/// best[w] = max(0, max{v : weight <= w}).
ValueProfile part_profile(std::span<const Item> part, std::size_t limit);

/// ceil(log2(1/delta)), at least 1. A trial isolates any k items with
/// probability above 1/2, so this many trials fail with probability <= delta.
std::size_t color_coding_trials(double delta);

/// Random k^2-way partitions, each joined part by part; the result is the
/// pointwise maximum over color_coding_trials(delta) trials. Covers every
/// subset of at most k items with probability >= 1 - delta per entry.
ValueProfile color_coding(std::span<const Item> items, std::size_t t,
                          std::size_t k, double delta, const Rng& rng,
                          const ConvKernel& kernel = naive_kernel());

/// Parameters of color_coding_layer; logarithms are base 2 and every value is
/// rounded up, with a floor of 1.
struct LayerParams {
  bool fallback = false;    // l < log(l/delta): plain color coding with k = l
  std::size_t parts = 1;    // m = l / log(l/delta), next power of two
  std::size_t gamma = 1;    // 6 log(l/delta)
  std::size_t part_cap = 0; // ceil(2 gamma t / l), capped at t
};

LayerParams layer_params(std::size_t t, std::size_t l, double delta);

/// One weight layer, items in (t/l, 2t/l] (any weight <= 2t/l when
/// open_below). Splits the layer into m random parts, color-codes each part
/// for gamma items at capacity 2 gamma t / l with failure delta / l, then joins
/// the parts pairwise, level h truncated at 2^h * 2 gamma t / l.
/// Throws InvalidInput for an item outside the band.
ValueProfile color_coding_layer(std::span<const Item> items, std::size_t t,
                                std::size_t l, double delta, const Rng& rng,
                                const ConvKernel& kernel = naive_kernel(),
                                bool open_below = false);

/// Number of weight layers used for n items: ceil(log2 n), at least 1.
std::size_t layer_count(std::size_t n);

/// Full profile for capacities 0..t. Layer i < L holds weights in
/// (t/2^i, t/2^{i-1}], the last layer L everything up to t/2^{L-1}; each is
/// solved by color_coding_layer(l = 2^i, delta / L) and the results are joined.
ValueProfile knapsack_rand(std::span<const Item> items, std::size_t t,
                           double delta, const Rng& rng,
                           const ConvKernel& kernel = naive_kernel());

ValueProfile knapsack_rand(const KnapsackInstance& inst,
                           const RandConfig& config);

}  // namespace mpconv
