#include <gtest/gtest.h>

#include <bit>

#include "mpconv/knapsack_rand.hpp"
#include "support.hpp"

namespace mpconv {
namespace {

std::vector<Value> dp_profile(const std::vector<Item>& items, Value t) {
  return knapsack01_dp({items, t, KnapsackMode::kZeroOne}).values();
}

void expect_sound(const ValueProfile& got, const std::vector<Value>& exact) {
  ASSERT_EQ(got.values().size(), exact.size());
  for (std::size_t w = 0; w < exact.size(); ++w) ASSERT_LE(got[w], exact[w]) << w;
}

TEST(RandConfig, Validation) {
  EXPECT_NO_THROW((RandConfig{0.25, 1, "naive"}.validate()));
  EXPECT_THROW((RandConfig{0.3, 1, "naive"}.validate()), InvalidInput);
  EXPECT_THROW((RandConfig{0.0, 1, "naive"}.validate()), InvalidInput);
  EXPECT_THROW((RandConfig{0.1, 1, "fft"}.validate()), InvalidInput);
}

TEST(JoinProfiles, BoundedJoin) {
  const ValueProfile p(std::vector<Value>{0, 2, 2});
  const ValueProfile q(std::vector<Value>{0, 0, 3, 3});
  EXPECT_EQ(join_profiles(p, q, 3).values(), (std::vector<Value>{0, 2, 3, 5}));
  EXPECT_EQ(join_profiles(p, q, 1).values(), (std::vector<Value>{0, 2}));
  // A short profile is extended with its last entry.
  EXPECT_EQ(join_profiles(ValueProfile(std::vector<Value>{4}), q, 3).values(),
            (std::vector<Value>{4, 4, 7, 7}));
}

TEST(PartProfile, Examples) {
  EXPECT_EQ(part_profile({}, 3).values(), (std::vector<Value>{0, 0, 0, 0}));
  const std::vector<Item> one{{2, 3}};
  EXPECT_EQ(part_profile(one, 3).values(), (std::vector<Value>{0, 0, 3, 3}));
  const std::vector<Item> two{{1, 4}, {2, 9}};
  EXPECT_EQ(part_profile(two, 2).values(), (std::vector<Value>{0, 4, 9}));
  const std::vector<Item> heavy{{5, 9}};
  EXPECT_EQ(part_profile(heavy, 2).values(), (std::vector<Value>{0, 0, 0}));
}

TEST(ColorCoding, Examples) {
  const Rng rng(61);
  EXPECT_EQ(color_coding({}, 4, 2, 0.1, rng).values(),
            (std::vector<Value>{0, 0, 0, 0, 0}));
  const std::vector<Item> single{{1, 1}};
  for (std::uint64_t s = 0; s < 50; ++s) {
    EXPECT_EQ(color_coding(single, 3, 1, 0.2, Rng(s)).at_capacity(), 1);
  }
  EXPECT_EQ(color_coding_trials(0.25), 2u);
  EXPECT_EQ(color_coding_trials(0.05), 5u);
  EXPECT_THROW(color_coding(single, 3, 0, 0.2, rng), InvalidInput);
}

TEST(ColorCoding, SmallOptimaFoundSeed62) {
  // Instances whose optimum uses at most k items.
  Rng rng(62);
  const double delta = 0.05;
  int runs = 0, failures = 0;
  for (int inst = 0; inst < 25; ++inst) {
    const auto items = testing::random_items(rng, 4 + rng.below(8), 20, 50);
    const Value t = rng.between(10, 30);
    const std::size_t k = 3;
    // Optimum restricted to <= k items, by enumeration.
    Value best_k = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << items.size()); ++mask) {
      if (std::popcount(mask) > static_cast<int>(k)) continue;
      Value w = 0, v = 0;
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (mask >> i & 1) {
          w += items[i].weight;
          v += items[i].value;
        }
      }
      if (w <= t) best_k = std::max(best_k, v);
    }
    const auto exact = dp_profile(items, t);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const ValueProfile got =
          color_coding(items, static_cast<std::size_t>(t), k, delta, Rng(1000 * inst + s));
      expect_sound(got, exact);
      ++runs;
      failures += got.at_capacity() < best_k;
    }
  }
  EXPECT_LE(static_cast<double>(failures) / runs, delta + 0.03);
}

TEST(LayerParams, Formulas) {
  // l = 64, delta = 1/4: log2(256) = 8, m = 64/8 = 8, gamma = 48.
  const LayerParams p = layer_params(100, 64, 0.25);
  EXPECT_FALSE(p.fallback);
  EXPECT_EQ(p.parts, 8u);
  EXPECT_EQ(p.gamma, 48u);
  EXPECT_EQ(p.part_cap, 100u);
  // l = 2 < log2(2 / 0.05): plain color coding.
  EXPECT_TRUE(layer_params(100, 2, 0.05).fallback);
  EXPECT_EQ(layer_count(1), 1u);
  EXPECT_EQ(layer_count(2), 1u);
  EXPECT_EQ(layer_count(3), 2u);
  EXPECT_EQ(layer_count(30), 5u);
}

TEST(ColorCodingLayer, Examples) {
  const Rng rng(63);
  EXPECT_EQ(color_coding_layer({}, 6, 2, 0.1, rng).values(),
            std::vector<Value>(7, 0));
  // Band (t/2, t]: at most one item fits, so the answer is the best single value.
  const std::vector<Item> heavy{{4, 3}, {5, 8}, {6, 7}};
  for (std::uint64_t s = 0; s < 50; ++s) {
    EXPECT_EQ(color_coding_layer(heavy, 6, 2, 0.1, Rng(s)).at_capacity(), 8);
  }
  const std::vector<Item> light{{1, 3}};
  EXPECT_THROW(color_coding_layer(light, 6, 2, 0.1, rng), InvalidInput);
  EXPECT_NO_THROW(color_coding_layer(light, 6, 2, 0.1, rng, naive_kernel(), true));
}

TEST(ColorCodingLayer, LayerOptimumSeed64) {
  Rng rng(64);
  const double delta = 0.25;
  const std::size_t t = 200, l = 32;
  int runs = 0, failures = 0;
  for (int inst = 0; inst < 10; ++inst) {
    std::vector<Item> items;
    // Weights in (t/l, 2t/l] = (6.25, 12.5].
    for (int i = 0; i < 40; ++i) items.push_back({rng.between(7, 12), rng.between(0, 40)});
    const auto exact = dp_profile(items, static_cast<Value>(t));
    for (std::uint64_t s = 0; s < 10; ++s) {
      const ValueProfile got =
          color_coding_layer(items, t, l, delta, Rng(50 * inst + s));
      expect_sound(got, exact);
      ++runs;
      failures += got.at_capacity() < exact.back();
    }
  }
  EXPECT_LE(static_cast<double>(failures) / runs, delta + 0.1);
}

TEST(KnapsackRand, Examples) {
  const std::vector<Item> items{{2, 3}, {3, 4}};
  int hits = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Value v = knapsack_rand(items, 5, 0.05, Rng(s)).at_capacity();
    ASSERT_LE(v, 7);
    hits += v == 7;
  }
  EXPECT_GE(hits, 190);
  const std::vector<Item> one{{3, 9}};
  for (std::uint64_t s = 0; s < 50; ++s) {
    EXPECT_EQ(knapsack_rand(one, 4, 0.05, Rng(s)).values(),
              (std::vector<Value>{0, 0, 0, 9, 9}));
  }
  EXPECT_EQ(knapsack_rand({}, 0, 0.05, Rng(1)).values(), (std::vector<Value>{0}));
  EXPECT_THROW(knapsack_rand(one, 4, 0.5, Rng(1)), InvalidInput);
}

TEST(KnapsackRand, DeterministicUnderSeed) {
  Rng rng(65);
  const auto items = testing::random_items(rng, 25, 40, 100);
  const RandConfig config{0.05, 99, "naive"};
  const KnapsackInstance inst{items, 60, KnapsackMode::kZeroOne};
  EXPECT_EQ(knapsack_rand(inst, config).values(), knapsack_rand(inst, config).values());
  const RandConfig blocked{0.05, 99, "blocked"};
  EXPECT_EQ(knapsack_rand(inst, config).values(), knapsack_rand(inst, blocked).values());
}

TEST(KnapsackRand, SoundAndMonotoneSeed66) {
  Rng rng(66);
  for (int round = 0; round < 1000; ++round) {
    const auto items = testing::random_items(rng, rng.below(20), 30, 60);
    const Value t = rng.between(0, 40);
    const ValueProfile got =
        knapsack_rand(items, static_cast<std::size_t>(t), 0.25, Rng(round));
    expect_sound(got, dp_profile(items, t));
    for (std::size_t w = 1; w < got.values().size(); ++w) ASSERT_LE(got[w - 1], got[w]);
  }
}

TEST(KnapsackRand, FailureRateSeed67) {
  Rng rng(67);
  for (const double delta : {0.25, 0.05}) {
    int runs = 0, failures = 0;
    for (int inst = 0; inst < 40; ++inst) {
      const auto items = testing::random_items(rng, 1 + rng.below(30), 30, 100);
      const Value t = rng.between(1, 60);
      const Value exact = dp_profile(items, t).back();
      for (std::uint64_t s = 0; s < 10; ++s) {
        const Value v = knapsack_rand(items, static_cast<std::size_t>(t), delta,
                                      Rng(100 * inst + s))
                            .at_capacity();
        ASSERT_LE(v, exact);
        ++runs;
        failures += v < exact;
      }
    }
    EXPECT_LE(static_cast<double>(failures) / runs, delta + 0.05) << delta;
  }
}

}  // namespace
}  // namespace mpconv
