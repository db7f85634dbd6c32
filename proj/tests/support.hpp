#pragma once

// Independent brute-force references and seeded instance builders shared by
// the unit, property and acceptance tests. Nothing here calls the solvers
// under test.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "mpconv/knapsack.hpp"
#include "mpconv/rng.hpp"
#include "mpconv/sequence.hpp"
#include "mpconv/tree.hpp"

namespace mpconv::testing {

inline std::vector<Value> brute_max_conv(const std::vector<Value>& a,
                                         const std::vector<Value>& b) {
  std::vector<Value> out(a.size() + b.size() - 1,
                         std::numeric_limits<Value>::min());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = std::max(out[i + j], a[i] + b[j]);
    }
  }
  return out;
}

inline std::vector<Value> brute_min_conv(const std::vector<Value>& a,
                                         const std::vector<Value>& b) {
  std::vector<Value> out(a.size() + b.size() - 1,
                         std::numeric_limits<Value>::max());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = std::min(out[i + j], a[i] + b[j]);
    }
  }
  return out;
}

inline bool brute_upper_bound(const Sequence& a, const Sequence& b,
                              const Sequence& c) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      if (a[i] + b[j] > c[i + j]) return false;
    }
  }
  return true;
}

inline bool brute_lower_bound(const Sequence& a, const Sequence& b,
                              const Sequence& c) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    bool covered = false;
    for (std::size_t i = 0; i <= k; ++i) covered = covered || a[i] + b[k - i] >= c[k];
    if (!covered) return false;
  }
  return true;
}

inline bool brute_superadditive(const Sequence& a) {
  return brute_upper_bound(a, a, a);
}

/// Best value per capacity over all 2^n subsets.
inline std::vector<Value> brute_knapsack01(const std::vector<Item>& items,
                                           Value capacity) {
  std::vector<Value> best(static_cast<std::size_t>(capacity) + 1, 0);
  const std::size_t n = items.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Value w = 0, v = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        w += items[i].weight;
        v += items[i].value;
      }
    }
    for (Value cap = w; cap <= capacity; ++cap) {
      best[static_cast<std::size_t>(cap)] =
          std::max(best[static_cast<std::size_t>(cap)], v);
    }
  }
  return best;
}

/// Best value at `capacity` over all multiplicity vectors (items need weight >= 1).
inline Value brute_unbounded(const std::vector<Item>& items, std::size_t from,
                             Value capacity) {
  if (from == items.size()) return 0;
  Value best = 0;
  const Item& it = items[from];
  for (Value copies = 0; copies * it.weight <= capacity; ++copies) {
    best = std::max(best, copies * it.value +
                              brute_unbounded(items, from + 1,
                                              capacity - copies * it.weight));
  }
  return best;
}

/// Root sparsity vector by enumerating all node subsets (small n only).
inline std::vector<Value> brute_tree_sparsity(const WeightedTree& tree) {
  const std::size_t n = tree.size();
  std::vector<Value> best(n + 1, std::numeric_limits<Value>::min());
  best[0] = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!(mask >> tree.root() & 1)) continue;
    bool connected = true;
    Value total = 0;
    std::size_t size = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(mask >> v & 1)) continue;
      ++size;
      total += tree.weight(v);
      if (v != tree.root() &&
          !(mask >> static_cast<std::size_t>(tree.parent(v)) & 1)) {
        connected = false;
      }
    }
    if (connected) best[size] = std::max(best[size], total);
  }
  return best;
}

inline std::vector<Value> random_values(Rng& rng, std::size_t n, Value bound) {
  std::vector<Value> out(n);
  for (Value& v : out) v = rng.between(-bound, bound);
  return out;
}

inline Sequence random_sequence(Rng& rng, std::size_t n, Value bound) {
  return Sequence(random_values(rng, n, bound));
}

/// c near max_conv(a, b) on 0..n-1 so that both verdicts of UpperBound (shift
/// > 0) or LowerBound (shift < 0) occur often.
inline Sequence planted_target(Rng& rng, const Sequence& a, const Sequence& b,
                               int direction) {
  const std::size_t n = a.size();
  const auto conv = brute_max_conv(a.values(), b.values());
  std::vector<Value> c(n);
  const auto spread = static_cast<Value>(2 * n + 2);
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = conv[k] + direction * rng.between(-1, spread);
  }
  return Sequence(std::move(c));
}

/// Convex sequence with a[0] = 0 (superadditive), optionally lowered at one
/// index so that both verdicts occur.
inline Sequence near_superadditive(Rng& rng, std::size_t n, Value bound) {
  std::vector<Value> steps(n);
  for (Value& s : steps) s = rng.between(-bound, bound);
  std::sort(steps.begin(), steps.end());
  std::vector<Value> a(n, 0);
  for (std::size_t i = 1; i < n; ++i) a[i] = a[i - 1] + steps[i - 1];
  if (rng.below(2) == 1) a[rng.below(n)] -= rng.between(1, 2);
  if (rng.below(8) == 0) a[0] = rng.between(-2, 2);
  return Sequence(std::move(a));
}

inline WeightedTree random_tree(Rng& rng, std::size_t n, Value max_weight) {
  std::vector<std::int64_t> parents(n, -1);
  std::vector<Value> weights(n);
  // A random root and random labels exercise more than the 0-rooted layout.
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(label[i - 1], label[rng.below(i)]);
  for (std::size_t v = 1; v < n; ++v) {
    parents[label[v]] = static_cast<std::int64_t>(label[rng.below(v)]);
  }
  for (Value& w : weights) w = rng.between(0, max_weight);
  return WeightedTree(std::move(parents), std::move(weights));
}

inline std::vector<Item> random_items(Rng& rng, std::size_t n, Value max_weight,
                                      Value max_value) {
  std::vector<Item> items(n);
  for (Item& it : items) {
    it.weight = rng.between(1, max_weight);
    it.value = rng.between(0, max_value);
  }
  return items;
}

}  // namespace mpconv::testing
