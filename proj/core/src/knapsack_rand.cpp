#include "mpconv/knapsack_rand.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace mpconv {
namespace {

std::size_t ceil_at_least_one(double x) {
  if (!(x > 1.0)) return 1;
  return static_cast<std::size_t>(std::ceil(x));
}

// ceil(num / den) for small non-negative operands.
std::size_t ceil_div(std::size_t num, std::size_t den) {
  return (num + den - 1) / den;
}

ValueProfile fit_to(const ValueProfile& p, std::size_t cap) {
  if (p.capacity() >= cap) return p.truncated(cap);
  std::vector<Value> out(p.values());
  out.resize(cap + 1, p.at_capacity());
  return ValueProfile(std::move(out));
}

bool weight_times_at_most(Value weight, std::size_t factor, std::size_t bound) {
  Value product;
  if (__builtin_mul_overflow(weight, static_cast<Value>(factor), &product)) {
    return false;
  }
  return product <= static_cast<Value>(bound);
}

}  // namespace

void RandConfig::validate() const {
  if (!(delta > 0.0 && delta <= 0.25)) {
    throw InvalidInput("delta must lie in (0, 1/4]");
  }
  kernel_by_name(kernel);
}

ValueProfile join_profiles(const ValueProfile& p, const ValueProfile& q,
                           std::size_t limit, const ConvKernel& kernel) {
  const ValueProfile pp = fit_to(p, std::min(p.capacity(), limit));
  const ValueProfile qq = fit_to(q, std::min(q.capacity(), limit));
  return fit_to(ValueProfile(max_conv(pp.view(), qq.view(), limit, kernel)),
                limit);
}

ValueProfile part_profile(std::span<const Item> part, std::size_t limit) {
  std::vector<Value> best(limit + 1, 0);
  for (const Item& it : part) {
    if (it.weight < 0 || it.value < 0) {
      throw InvalidInput("items need non-negative weight and value");
    }
    if (!weight_times_at_most(it.weight, 1, limit)) continue;
    Value& slot = best[static_cast<std::size_t>(it.weight)];
    slot = std::max(slot, it.value);
  }
  for (std::size_t w = 1; w <= limit; ++w) best[w] = std::max(best[w], best[w - 1]);
  return ValueProfile(std::move(best));
}

std::size_t color_coding_trials(double delta) {
  return ceil_at_least_one(std::log2(1.0 / delta));
}

ValueProfile color_coding(std::span<const Item> items, std::size_t t,
                          std::size_t k, double delta, const Rng& rng,
                          const ConvKernel& kernel) {
  if (k == 0) throw InvalidInput("color_coding: k must be >= 1");
  const std::uint64_t parts = static_cast<std::uint64_t>(k) * k;
  const std::size_t trials = color_coding_trials(delta);
  ValueProfile best(t);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng stream = rng.child(trial);
    // Only non-empty parts matter: the all-zero profile is the identity of
    // the join on non-decreasing profiles.
    std::map<std::uint64_t, std::vector<Item>> groups;
    for (const Item& it : items) groups[stream.below(parts)].push_back(it);
    ValueProfile joined(t);
    for (const auto& [part, members] : groups) {
      joined = join_profiles(joined, part_profile(members, t), t, kernel);
    }
    best = best.pointwise_max(joined);
  }
  return best;
}

LayerParams layer_params(std::size_t t, std::size_t l, double delta) {
  if (l == 0) throw InvalidInput("layer index l must be >= 1");
  const double lg = std::log2(static_cast<double>(l) / delta);
  LayerParams p;
  p.fallback = static_cast<double>(l) < lg;
  p.parts = std::bit_ceil(ceil_at_least_one(static_cast<double>(l) / lg));
  p.gamma = ceil_at_least_one(6.0 * lg);
  p.part_cap = std::min(ceil_div(2 * p.gamma * t, l), t);
  return p;
}

ValueProfile color_coding_layer(std::span<const Item> items, std::size_t t,
                                std::size_t l, double delta, const Rng& rng,
                                const ConvKernel& kernel, bool open_below) {
  for (const Item& it : items) {
    const bool fits_upper = weight_times_at_most(it.weight, l, 2 * t);
    const bool fits_lower = open_below || !weight_times_at_most(it.weight, l, t);
    if (!fits_upper || !fits_lower) {
      throw InvalidInput("color_coding_layer: item weight " +
                         std::to_string(it.weight) + " outside the layer band");
    }
  }
  const LayerParams p = layer_params(t, l, delta);
  if (p.fallback) return color_coding(items, t, l, delta, rng, kernel);

  Rng partition = rng.child(0);
  std::vector<std::vector<Item>> groups(p.parts);
  for (const Item& it : items) groups[partition.below(p.parts)].push_back(it);

  const double sub_delta = delta / static_cast<double>(l);
  std::vector<ValueProfile> level;
  level.reserve(p.parts);
  for (std::size_t j = 0; j < p.parts; ++j) {
    level.push_back(color_coding(groups[j], p.part_cap, p.gamma, sub_delta,
                                 rng.child(j + 1), kernel));
  }
  const std::size_t unit = 2 * p.gamma * t;
  for (std::size_t h = 1; level.size() > 1; ++h) {
    const std::size_t cap = std::min(ceil_div(unit << h, l), t);
    std::vector<ValueProfile> next;
    next.reserve(level.size() / 2);
    for (std::size_t j = 0; j + 1 < level.size(); j += 2) {
      next.push_back(join_profiles(level[j], level[j + 1], cap, kernel));
    }
    level = std::move(next);
  }
  return fit_to(level.front(), t);
}

std::size_t layer_count(std::size_t n) {
  if (n <= 2) return 1;
  return static_cast<std::size_t>(std::bit_width(n - 1));
}

ValueProfile knapsack_rand(std::span<const Item> items, std::size_t t,
                           double delta, const Rng& rng,
                           const ConvKernel& kernel) {
  if (!(delta > 0.0 && delta <= 0.25)) {
    throw InvalidInput("delta must lie in (0, 1/4]");
  }
  std::vector<Item> usable;
  for (const Item& it : items) {
    if (it.weight < 0 || it.value < 0) {
      throw InvalidInput("items need non-negative weight and value");
    }
    if (weight_times_at_most(it.weight, 1, t)) usable.push_back(it);
  }
  if (t == 0) {
    // Only weight-0 items fit, and all of them can be taken together.
    Value total = 0;
    for (const Item& it : usable) total = checked_add(total, it.value);
    return ValueProfile(std::vector<Value>{total});
  }

  const std::size_t layers = layer_count(usable.size());
  std::vector<std::vector<Item>> by_layer(layers);
  for (const Item& it : usable) {
    std::size_t layer = layers;  // bottom layer unless a heavier band fits
    for (std::size_t i = 1; i < layers; ++i) {
      if (!weight_times_at_most(it.weight, std::size_t{1} << i, t)) {
        layer = i;
        break;
      }
    }
    by_layer[layer - 1].push_back(it);
  }

  const double layer_delta = delta / static_cast<double>(layers);
  ValueProfile total(t);
  for (std::size_t i = 1; i <= layers; ++i) {
    const ValueProfile layer_profile = color_coding_layer(
        by_layer[i - 1], t, std::size_t{1} << i, layer_delta, rng.child(i),
        kernel, /*open_below=*/i == layers);
    total = join_profiles(total, layer_profile, t, kernel);
  }
  return total;
}

ValueProfile knapsack_rand(const KnapsackInstance& inst,
                           const RandConfig& config) {
  inst.validate();
  config.validate();
  return knapsack_rand(inst.items, static_cast<std::size_t>(inst.capacity),
                       config.delta, Rng(config.seed),
                       kernel_by_name(config.kernel));
}

}  // namespace mpconv
