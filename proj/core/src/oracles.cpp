#include "mpconv/oracles.hpp"

#include <algorithm>
#include <limits>

namespace mpconv {

Sequence mcsp_brute(const Sequence& a) {
  const std::size_t n = a.size();
  std::vector<Value> best(n, std::numeric_limits<Value>::min());
  for (std::size_t start = 0; start < n; ++start) {
    Value sum = 0;
    for (std::size_t end = start; end < n; ++end) {
      sum = checked_add(sum, a[end]);
      Value& slot = best[end - start];
      slot = std::max(slot, sum);
    }
  }
  return Sequence(std::move(best));
}

Verdict<IndexPair> three_sum_conv_brute(const Sequence& a, const Sequence& b,
                                        const Sequence& c) {
  require_equal_lengths(a, b, c, "three_sum_conv_brute");
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      if (checked_add(a[i], b[k - i]) == c[k]) {
        return {true, IndexPair{i, k - i}};
      }
    }
  }
  return {false, std::nullopt};
}

}  // namespace mpconv
