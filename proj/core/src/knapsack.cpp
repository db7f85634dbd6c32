#include "mpconv/knapsack.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace mpconv {

void KnapsackInstance::validate() const {
  if (capacity < 0) throw InvalidInput("knapsack capacity must be >= 0");
  for (const Item& it : items) {
    if (it.weight < 0 || it.value < 0) {
      throw InvalidInput("knapsack items need non-negative weight and value");
    }
  }
}

KnapsackInstance KnapsackInstance::pruned() const {
  KnapsackInstance out{{}, capacity, mode};
  for (const Item& it : items) {
    if (it.weight <= capacity) out.items.push_back(it);
  }
  return out;
}

ValueProfile::ValueProfile(std::size_t capacity) : best_(capacity + 1, 0) {}

ValueProfile::ValueProfile(std::vector<Value> best) : best_(std::move(best)) {
  if (best_.empty()) throw InvalidInput("value profile must be non-empty");
  if (best_[0] < 0) throw InvalidInput("value profile must be non-negative");
  for (std::size_t w = 1; w < best_.size(); ++w) {
    if (best_[w] < best_[w - 1]) {
      throw InvalidInput("value profile must be non-decreasing at w=" +
                         std::to_string(w));
    }
  }
}

ValueProfile ValueProfile::truncated(std::size_t cap) const {
  if (cap > capacity()) throw InvalidInput("cannot extend a value profile");
  return ValueProfile(std::vector<Value>(best_.begin(), best_.begin() + cap + 1));
}

ValueProfile ValueProfile::pointwise_max(const ValueProfile& other) const {
  if (other.best_.size() != best_.size()) {
    throw InvalidInput("pointwise_max: capacity mismatch");
  }
  std::vector<Value> out(best_.size());
  for (std::size_t w = 0; w < out.size(); ++w) {
    out[w] = std::max(best_[w], other.best_[w]);
  }
  return ValueProfile(std::move(out));
}

ValueProfile knapsack01_dp(const KnapsackInstance& inst) {
  inst.validate();
  const auto t = static_cast<std::size_t>(inst.capacity);
  std::vector<Value> best(t + 1, 0);
  for (const Item& it : inst.items) {
    if (it.weight > inst.capacity) continue;
    const auto w_it = static_cast<std::size_t>(it.weight);
    for (std::size_t w = t + 1; w-- > w_it;) {
      best[w] = std::max(best[w], checked_add(best[w - w_it], it.value));
    }
  }
  return ValueProfile(std::move(best));
}

ValueProfile unbounded_knapsack_dp(const KnapsackInstance& inst) {
  inst.validate();
  const auto t = static_cast<std::size_t>(inst.capacity);
  std::map<Value, Value> by_weight;
  for (const Item& it : inst.items) {
    if (it.weight == 0) {
      if (it.value > 0) {
        throw InvalidInput(
            "unbounded knapsack: zero-weight item with positive value");
      }
      continue;
    }
    if (it.weight > inst.capacity) continue;
    auto [pos, inserted] = by_weight.emplace(it.weight, it.value);
    if (!inserted) pos->second = std::max(pos->second, it.value);
  }
  std::vector<Value> best(t + 1, 0);
  for (const auto& [weight, value] : by_weight) {
    const auto w_it = static_cast<std::size_t>(weight);
    for (std::size_t w = w_it; w <= t; ++w) {
      best[w] = std::max(best[w], checked_add(best[w - w_it], value));
    }
  }
  return ValueProfile(std::move(best));
}

}  // namespace mpconv
