#include "mpconv/convolution.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace mpconv {
namespace {

constexpr Value kMinusInf = std::numeric_limits<Value>::min();

void naive_run(std::span<const Value> a, std::span<const Value> b,
               std::span<Value> out) {
  const std::size_t len = out.size();
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t i_lo = k >= b.size() ? k - b.size() + 1 : 0;
    const std::size_t i_hi = std::min(k, a.size() - 1);
    Value best = kMinusInf;
    for (std::size_t i = i_lo; i <= i_hi; ++i) {
      best = std::max(best, a[i] + b[k - i]);
    }
    out[k] = best;
  }
}

// Scatter form over (i, j) tiles; each tile touches a contiguous window of
// out, so both inputs and the output window stay resident.
void blocked_run(std::span<const Value> a, std::span<const Value> b,
                 std::span<Value> out) {
  constexpr std::size_t kTile = 256;
  const std::size_t len = out.size();
  std::fill(out.begin(), out.end(), kMinusInf);
  for (std::size_t i0 = 0; i0 < a.size() && i0 < len; i0 += kTile) {
    const std::size_t i1 = std::min({a.size(), i0 + kTile, len});
    for (std::size_t j0 = 0; j0 < b.size() && i0 + j0 < len; j0 += kTile) {
      const std::size_t j1 = std::min(b.size(), j0 + kTile);
      for (std::size_t i = i0; i < i1; ++i) {
        const Value ai = a[i];
        const std::size_t j_end = std::min(j1, len - i);
        Value* row = out.data() + i;
        for (std::size_t j = j0; j < j_end; ++j) {
          row[j] = std::max(row[j], ai + b[j]);
        }
      }
    }
  }
}

constexpr std::array<ConvKernel, 2> kKernels{{
    {"naive", &naive_run},
    {"blocked", &blocked_run},
}};

void check_sum_range(std::span<const Value> a, std::span<const Value> b) {
  const auto [amin, amax] = std::minmax_element(a.begin(), a.end());
  const auto [bmin, bmax] = std::minmax_element(b.begin(), b.end());
  // Every pairwise sum lies between these two; checking both endpoints
  // covers all of them.
  checked_add(*amin, *bmin);
  checked_add(*amax, *bmax);
}

}  // namespace

const ConvKernel& naive_kernel() { return kKernels[0]; }
const ConvKernel& blocked_kernel() { return kKernels[1]; }

std::span<const ConvKernel> kernels() { return kKernels; }

const ConvKernel& kernel_by_name(std::string_view name) {
  for (const ConvKernel& k : kKernels) {
    if (k.name == name) return k;
  }
  throw InvalidInput("unknown convolution kernel: " + std::string(name));
}

std::vector<Value> max_conv(std::span<const Value> a, std::span<const Value> b,
                            std::optional<std::size_t> limit,
                            const ConvKernel& kernel) {
  if (a.empty() || b.empty()) {
    throw InvalidInput("max_conv: inputs must be non-empty");
  }
  check_sum_range(a, b);
  std::size_t last = a.size() + b.size() - 2;
  if (limit) last = std::min(last, *limit);
  std::vector<Value> out(last + 1);
  kernel.run(a, b, out);
  return out;
}

Sequence max_conv(const Sequence& a, const Sequence& b,
                  std::optional<std::size_t> limit, const ConvKernel& kernel) {
  return Sequence(max_conv(a.view(), b.view(), limit, kernel));
}

Sequence min_conv(const Sequence& a, const Sequence& b,
                  std::optional<std::size_t> limit, const ConvKernel& kernel) {
  return max_conv(a.negated(), b.negated(), limit, kernel).negated();
}

}  // namespace mpconv
