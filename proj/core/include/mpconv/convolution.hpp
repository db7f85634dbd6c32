#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mpconv/sequence.hpp"

namespace mpconv {

/// Raw kernel signature: writes out[k] = max_{i+j=k} a[i] + b[j] for
/// k < out.size(). Callers guarantee a and b are non-empty, out.size() <=
/// a.size() + b.size() - 1, and that no pairwise sum overflows.
using MaxConvFn = void (*)(std::span<const Value> a, std::span<const Value> b,
                           std::span<Value> out);

/// A named, swappable (max,+)-convolution implementation.
struct ConvKernel {
  std::string_view name;
  MaxConvFn run;
};

/// Straightforward O(|a| |b|) double loop. The reference every other kernel
/// is tested against.
const ConvKernel& naive_kernel();

/// Same arithmetic as the naive kernel, iterated in cache-sized tiles.
const ConvKernel& blocked_kernel();

/// All registered kernels, naive first.
std::span<const ConvKernel> kernels();

/// Throws InvalidInput for an unknown name.
const ConvKernel& kernel_by_name(std::string_view name);

/// Bounded (max,+)-convolution on raw arrays: out[k] for k = 0..last where
/// last = min(limit, |a|+|b|-2). Throws OverflowError if any a[i]+b[j] leaves
/// the word.
std::vector<Value> max_conv(std::span<const Value> a, std::span<const Value> b,
                            std::optional<std::size_t> limit = std::nullopt,
                            const ConvKernel& kernel = naive_kernel());

Sequence max_conv(const Sequence& a, const Sequence& b,
                  std::optional<std::size_t> limit = std::nullopt,
                  const ConvKernel& kernel = naive_kernel());

/// (min,+)-convolution, computed as -max_conv(-a, -b).
Sequence min_conv(const Sequence& a, const Sequence& b,
                  std::optional<std::size_t> limit = std::nullopt,
                  const ConvKernel& kernel = naive_kernel());

}  // namespace mpconv
