#include "mpconv/predicates.hpp"

#include <algorithm>

namespace mpconv {

Verdict<IndexPair> check_upper_bound(const Sequence& a, const Sequence& b,
                                     const Sequence& c) {
  require_equal_lengths(a, b, c, "check_upper_bound");
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      if (checked_add(a[i], b[k - i]) > c[k]) {
        return {false, IndexPair{i, k - i}};
      }
    }
  }
  return {true, std::nullopt};
}

Verdict<std::size_t> check_lower_bound(const Sequence& a, const Sequence& b,
                                       const Sequence& c) {
  require_equal_lengths(a, b, c, "check_lower_bound");
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool covered = false;
    for (std::size_t i = 0; i <= k && !covered; ++i) {
      covered = checked_add(a[i], b[k - i]) >= c[k];
    }
    if (!covered) return {false, k};
  }
  return {true, std::nullopt};
}

Verdict<IndexPair> is_superadditive(const Sequence& a) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      if (checked_add(a[i], a[k - i]) > a[k]) {
        return {false, IndexPair{i, k - i}};
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<Normalized> normalize_nonneg_monotone(const Sequence& a) {
  if (a[0] > 0) return std::nullopt;
  const Value shift = checked_add(a.max_abs(), 1);
  std::vector<Value> out(a.size());
  out[0] = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i] = checked_add(checked_mul(shift, static_cast<Value>(i)), a[i]);
  }
  return Normalized{Sequence(std::move(out)), shift};
}

}  // namespace mpconv
