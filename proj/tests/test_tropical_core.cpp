#include <gtest/gtest.h>

#include <limits>

#include "mpconv/convolution.hpp"
#include "mpconv/predicates.hpp"
#include "support.hpp"

namespace mpconv {
namespace {

using testing::brute_max_conv;
using testing::random_sequence;

std::vector<Value> conv(std::vector<Value> a, std::vector<Value> b,
                        std::optional<std::size_t> limit = std::nullopt) {
  return max_conv(Sequence(std::move(a)), Sequence(std::move(b)), limit).values();
}

TEST(Sequence, RejectsEmptyAndHeadroomOverflow) {
  EXPECT_THROW(Sequence(std::vector<Value>{}), InvalidInput);
  const Value huge = std::numeric_limits<Value>::max() / 400;
  EXPECT_THROW(Sequence({huge, 0}), OverflowError);
  EXPECT_NO_THROW(Sequence({huge / 2}));
  EXPECT_THROW(Sequence({std::numeric_limits<Value>::min()}), OverflowError);
}

TEST(Sequence, NegatedAndPrefix) {
  const Sequence s{3, -1, 4};
  EXPECT_EQ(s.negated(), (Sequence{-3, 1, -4}));
  EXPECT_EQ(s.prefix(2), (Sequence{3, -1}));
  EXPECT_EQ(s.max_abs(), 4);
  EXPECT_THROW(s.prefix(0), InvalidInput);
  EXPECT_THROW(s.prefix(4), InvalidInput);
}

TEST(CheckedArithmetic, ThrowsInsteadOfWrapping) {
  const Value big = std::numeric_limits<Value>::max();
  EXPECT_THROW(checked_add(big, 1), OverflowError);
  EXPECT_THROW(checked_sub(std::numeric_limits<Value>::min(), 1), OverflowError);
  EXPECT_THROW(checked_mul(big, 2), OverflowError);
  EXPECT_EQ(checked_add(2, 3), 5);
}

TEST(MaxConv, Examples) {
  EXPECT_EQ(conv({0}, {0}), (std::vector<Value>{0}));
  EXPECT_EQ(conv({0, 1}, {0, 2}, 1), (std::vector<Value>{0, 2}));
  // Enumerated by hand: k=0: 1; k=1: max(1+3, 5+0); k=2: max(1+1, 5+3, 2+0);
  // k=3: max(5+1, 2+3); k=4: 2+1.
  EXPECT_EQ(conv({1, 5, 2}, {0, 3, 1}), (std::vector<Value>{1, 5, 8, 6, 3}));
  EXPECT_EQ(conv({1, 5, 2}, {0, 3, 1}), brute_max_conv({1, 5, 2}, {0, 3, 1}));
}

TEST(MaxConv, LimitAndUnequalLengths) {
  EXPECT_EQ(conv({1, 2, 3}, {10}), (std::vector<Value>{11, 12, 13}));
  EXPECT_EQ(conv({1, 2, 3}, {10}, 0), (std::vector<Value>{11}));
  EXPECT_EQ(conv({1, 2}, {3, 4}, 99), (std::vector<Value>{4, 5, 6}));
}

TEST(MaxConv, OverflowIsAnError) {
  const Value big = std::numeric_limits<Value>::max() / 2 + 1;
  const std::vector<Value> a{big, big};
  EXPECT_THROW(max_conv(std::span<const Value>(a), std::span<const Value>(a)),
               OverflowError);
}

TEST(MinConv, Examples) {
  EXPECT_EQ(min_conv(Sequence{0}, Sequence{0}).values(), (std::vector<Value>{0}));
  EXPECT_EQ(min_conv(Sequence{0, 1}, Sequence{0, 2}).values(),
            (std::vector<Value>{0, 1, 3}));
}

TEST(Kernels, RegistryAndLookup) {
  EXPECT_EQ(kernel_by_name("naive").name, "naive");
  EXPECT_EQ(kernel_by_name("blocked").name, "blocked");
  EXPECT_THROW(kernel_by_name("fft"), InvalidInput);
  EXPECT_GE(kernels().size(), 2u);
}

// Crosses the 256-wide tile boundary of the blocked kernel.
TEST(Kernels, BlockedMatchesNaiveSeed404) {
  Rng rng(404);
  for (int round = 0; round < 60; ++round) {
    const Sequence a = random_sequence(rng, 1 + rng.below(700), 1000);
    const Sequence b = random_sequence(rng, 1 + rng.below(700), 1000);
    const std::optional<std::size_t> limit =
        rng.below(2) ? std::optional<std::size_t>(rng.below(900)) : std::nullopt;
    ASSERT_EQ(max_conv(a, b, limit, naive_kernel()),
              max_conv(a, b, limit, blocked_kernel()));
  }
}

TEST(CheckUpperBound, Examples) {
  EXPECT_TRUE(check_upper_bound({0, 0}, {0, 0}, {0, 0}).yes);
  const auto no = check_upper_bound({0, 1}, {0, 1}, {0, 0});
  ASSERT_FALSE(no.yes);
  ASSERT_TRUE(no.witness);
  EXPECT_EQ(no.witness->i + no.witness->j, 1u);
  EXPECT_TRUE(check_upper_bound({0, 1}, {0, 2}, {0, 2}).yes);
  EXPECT_THROW(check_upper_bound({0}, {0, 1}, {0, 1}), InvalidInput);
}

TEST(CheckLowerBound, Examples) {
  EXPECT_TRUE(check_lower_bound({0, 0}, {0, 0}, {0, 0}).yes);
  const auto no = check_lower_bound({0, 0}, {0, 0}, {0, 1});
  ASSERT_FALSE(no.yes);
  EXPECT_EQ(no.witness, std::optional<std::size_t>(1));
  EXPECT_TRUE(check_lower_bound({0, 3}, {0, 0}, {0, 3}).yes);
  EXPECT_THROW(check_lower_bound({0}, {0}, {0, 1}), InvalidInput);
}

TEST(IsSuperadditive, Examples) {
  EXPECT_TRUE(is_superadditive({0, 1, 2, 3}).yes);
  const auto no = is_superadditive({0, 2, 3});
  ASSERT_FALSE(no.yes);
  EXPECT_EQ(no.witness->i, 1u);
  EXPECT_EQ(no.witness->j, 1u);
  // Any reported pair must really violate: a[0]+a[0] > a[0] and
  // a[0]+a[1] > a[1] both hold here.
  const Sequence a{1, 0};
  const auto w = is_superadditive(a);
  ASSERT_FALSE(w.yes);
  EXPECT_GT(a[w.witness->i] + a[w.witness->j], a[w.witness->i + w.witness->j]);
}

TEST(Normalize, Examples) {
  const auto zeros = normalize_nonneg_monotone({0, 0, 0});
  ASSERT_TRUE(zeros);
  EXPECT_EQ(zeros->sequence, (Sequence{0, 1, 2}));
  EXPECT_EQ(zeros->shift, 1);
  const auto mixed = normalize_nonneg_monotone({0, -1, 5});
  ASSERT_TRUE(mixed);
  EXPECT_EQ(mixed->sequence, (Sequence{0, 5, 17}));
  EXPECT_EQ(mixed->shift, 6);
  EXPECT_FALSE(normalize_nonneg_monotone({1, 0}));
}

// Property suite: 2000 seeded cases per property.

TEST(TropicalProperties, KernelEqualsBruteForceSeed1) {
  Rng rng(1);
  for (int round = 0; round < 2000; ++round) {
    const Sequence a = random_sequence(rng, 1 + rng.below(40), 100);
    const Sequence b = random_sequence(rng, 1 + rng.below(40), 100);
    ASSERT_EQ(max_conv(a, b).values(), brute_max_conv(a.values(), b.values()));
  }
}

TEST(TropicalProperties, DualitySeed2) {
  Rng rng(2);
  for (int round = 0; round < 2000; ++round) {
    const Sequence a = random_sequence(rng, 1 + rng.below(40), 100);
    const Sequence b = random_sequence(rng, 1 + rng.below(40), 100);
    const Sequence lo = min_conv(a, b);
    const Sequence hi = max_conv(a.negated(), b.negated());
    ASSERT_EQ(lo, hi.negated());
    ASSERT_EQ(lo.values(), testing::brute_min_conv(a.values(), b.values()));
  }
}

TEST(TropicalProperties, CommutativitySeed3) {
  Rng rng(3);
  for (int round = 0; round < 2000; ++round) {
    const Sequence a = random_sequence(rng, 1 + rng.below(40), 100);
    const Sequence b = random_sequence(rng, 1 + rng.below(40), 100);
    ASSERT_EQ(max_conv(a, b), max_conv(b, a));
  }
}

TEST(TropicalProperties, AssociativitySeed4) {
  Rng rng(4);
  for (int round = 0; round < 2000; ++round) {
    const Sequence a = random_sequence(rng, 1 + rng.below(20), 100);
    const Sequence b = random_sequence(rng, 1 + rng.below(20), 100);
    const Sequence c = random_sequence(rng, 1 + rng.below(20), 100);
    ASSERT_EQ(max_conv(max_conv(a, b), c), max_conv(a, max_conv(b, c)));
  }
}

TEST(TropicalProperties, SuperadditiveIdempotenceSeed5) {
  Rng rng(5);
  int superadditive = 0;
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = 1 + rng.below(30);
    std::vector<Value> v = testing::near_superadditive(rng, n, 50).values();
    v[0] = 0;
    const Sequence a(std::move(v));
    if (!is_superadditive(a).yes) continue;
    ++superadditive;
    ASSERT_EQ(max_conv(a, a, n - 1), a);
  }
  EXPECT_GE(superadditive, 1000);
}

TEST(TropicalProperties, UpperBoundMatchesPointwiseComparisonSeed6) {
  Rng rng(6);
  int yes = 0;
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = 1 + rng.below(30);
    const Sequence a = random_sequence(rng, n, 100);
    const Sequence b = random_sequence(rng, n, 100);
    const Sequence c = testing::planted_target(rng, a, b, +1);
    const Sequence m = max_conv(a, b, n - 1);
    bool dominated = true;
    for (std::size_t k = 0; k < n; ++k) dominated = dominated && m[k] <= c[k];
    const auto verdict = check_upper_bound(a, b, c);
    ASSERT_EQ(verdict.yes, dominated);
    if (!verdict.yes) {
      const auto [i, j] = *verdict.witness;
      ASSERT_GT(a[i] + b[j], c[i + j]);
    }
    yes += verdict.yes;
  }
  EXPECT_GT(yes, 100);
  EXPECT_LT(yes, 1900);
}

TEST(TropicalProperties, NormalizationPreservesVerdictSeed7) {
  Rng rng(7);
  int yes = 0;
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = 1 + rng.below(30);
    const Sequence a = rng.below(2) ? testing::near_superadditive(rng, n, 50)
                                    : random_sequence(rng, n, 50);
    const bool verdict = is_superadditive(a).yes;
    ASSERT_EQ(verdict, testing::brute_superadditive(a));
    const auto norm = normalize_nonneg_monotone(a);
    if (!norm) {
      ASSERT_FALSE(verdict);
      continue;
    }
    const Sequence& s = norm->sequence;
    ASSERT_EQ(s[0], 0);
    for (std::size_t i = 1; i < n; ++i) {
      ASSERT_GT(s[i], 0);
      if (verdict) ASSERT_LT(s[i - 1], s[i]);
    }
    ASSERT_EQ(is_superadditive(s).yes, verdict);
    yes += verdict;
  }
  EXPECT_GT(yes, 100);
}

}  // namespace
}  // namespace mpconv
