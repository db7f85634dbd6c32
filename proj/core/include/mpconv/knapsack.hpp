#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mpconv/sequence.hpp"

namespace mpconv {

struct Item {
  Value weight = 0;
  Value value = 0;
  friend bool operator==(const Item&, const Item&) = default;
};

enum class KnapsackMode { kZeroOne, kUnbounded };

struct KnapsackInstance {
  std::vector<Item> items;
  Value capacity = 0;
  KnapsackMode mode = KnapsackMode::kZeroOne;

  /// Throws InvalidInput on negative weights, values or capacity.
  void validate() const;

  /// Copy without the items heavier than the capacity; answers unchanged.
  KnapsackInstance pruned() const;

  friend bool operator==(const KnapsackInstance&,
                         const KnapsackInstance&) = default;
};

/// best[w] = largest total value of a solution with total weight <= w, for
/// w = 0..capacity. Always non-negative and non-decreasing.
class ValueProfile {
 public:
  /// All-zero profile (the empty item set).
  explicit ValueProfile(std::size_t capacity);

  /// Throws InvalidInput unless `best` is non-empty, non-negative and
  /// non-decreasing.
  explicit ValueProfile(std::vector<Value> best);

  std::size_t capacity() const { return best_.size() - 1; }
  Value operator[](std::size_t w) const { return best_[w]; }
  Value at_capacity() const { return best_.back(); }
  std::span<const Value> view() const { return best_; }
  const std::vector<Value>& values() const { return best_; }

  /// Profile restricted to capacities 0..cap (cap <= capacity()).
  ValueProfile truncated(std::size_t cap) const;

  /// Pointwise maximum; both profiles must have the same capacity.
  ValueProfile pointwise_max(const ValueProfile& other) const;

  friend bool operator==(const ValueProfile&, const ValueProfile&) = default;

 private:
  std::vector<Value> best_;
};

/// 0/1 knapsack optimum for every capacity 0..t in O(n t).
ValueProfile knapsack01_dp(const KnapsackInstance& inst);

/// Unbounded knapsack optimum for every capacity 0..t in O(t^2 + n): keeps
/// only the most valuable item per weight, then runs the O(n t) DP.
/// Throws InvalidInput on a zero-weight item with positive value.
ValueProfile unbounded_knapsack_dp(const KnapsackInstance& inst);

}  // namespace mpconv
