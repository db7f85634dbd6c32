#include <gtest/gtest.h>

#include <bit>
#include <cmath>

#include "mpconv/convolution.hpp"
#include "mpconv/reductions.hpp"
#include "mpconv/via_decision.hpp"
#include "support.hpp"

namespace mpconv {
namespace {

using testing::random_sequence;

Sequence truncated_conv(const Sequence& a, const Sequence& b) {
  return max_conv(a, b, a.size() - 1);
}

Sequence shifted(const Sequence& s, Value delta) {
  std::vector<Value> v = s.values();
  for (Value& x : v) x += delta;
  return Sequence(std::move(v));
}

UpperBoundOracle counting_oracle(std::size_t& calls) {
  return [&calls](const Sequence& a, const Sequence& b, const Sequence& c) {
    ++calls;
    return check_upper_bound(a, b, c).yes;
  };
}

std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

TEST(DetectSingle, Examples) {
  const Sequence a{0, 1}, b{0, 1};
  EXPECT_EQ(detect_single(a, b, truncated_conv(a, b), direct_upper_bound_oracle()),
            std::nullopt);
  EXPECT_EQ(detect_single(a, b, Sequence{0, 0}, direct_upper_bound_oracle()),
            std::optional<std::size_t>(1));
}

TEST(DetectSingle, SmallestViolationAndCallBoundSeed51) {
  Rng rng(51);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 1 + rng.below(40);
    const Sequence a = random_sequence(rng, n, 100);
    const Sequence b = random_sequence(rng, n, 100);
    std::vector<Value> c = truncated_conv(a, b).values();
    std::optional<std::size_t> expected;
    for (std::size_t k = 0; k < n; ++k) {
      if (rng.below(6) == 0) {
        c[k] -= 1;
        if (!expected) expected = k;
      }
    }
    std::size_t calls = 0;
    ASSERT_EQ(detect_single(a, b, Sequence(c), counting_oracle(calls)), expected);
    ASSERT_LE(calls, ceil_log2(n) + 1);
  }
}

TEST(DetectSingle, DecrementedEntryFive) {
  Rng rng(52);
  const Sequence a = random_sequence(rng, 12, 50);
  const Sequence b = random_sequence(rng, 12, 50);
  std::vector<Value> c = truncated_conv(a, b).values();
  c[5] -= 1;
  EXPECT_EQ(detect_single(a, b, Sequence(c), direct_upper_bound_oracle()),
            std::optional<std::size_t>(5));
}

TEST(DetectViolations, Examples) {
  Rng rng(53);
  const Sequence a = random_sequence(rng, 20, 50);
  const Sequence b = random_sequence(rng, 20, 50);
  const Sequence conv = truncated_conv(a, b);
  EXPECT_EQ(detect_violations(a, b, shifted(conv, 1)).violated,
            std::vector<bool>(20, false));
  EXPECT_EQ(detect_violations(a, b, shifted(conv, -1)).violated,
            std::vector<bool>(20, true));
}

TEST(DetectViolations, MatchesSubsetAndAccountingSeed54) {
  Rng rng(54);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 1 + rng.below(48);
    const Sequence a = random_sequence(rng, n, 256);
    const Sequence b = random_sequence(rng, n, 256);
    std::vector<Value> c = truncated_conv(a, b).values();
    std::vector<bool> expected(n, false);
    std::size_t marked = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (rng.below(3) == 0) {
        c[k] -= rng.between(1, 5);
        expected[k] = true;
        ++marked;
      } else {
        c[k] += rng.between(0, 3);
      }
    }
    const Sequence c_seq(c);
    const Sequence c_before = c_seq;
    DecisionStats stats;
    const auto report =
        detect_violations(a, b, c_seq, direct_upper_bound_oracle(), &stats);
    ASSERT_EQ(report.violated, expected);
    ASSERT_EQ(c_seq, c_before);
    // One detect_single call per interval pair that comes back clean, plus
    // one per index it reports.
    const std::size_t m = static_cast<std::size_t>(
        std::ceil(std::sqrt(static_cast<double>(n))));
    ASSERT_LE(stats.max_round_single_calls, m * m + marked);
    ASSERT_EQ(stats.max_round_marked, marked);
    ASSERT_LE(stats.detect_single_calls, m * m + marked);
  }
}

TEST(DetectViolations, FaultyOracleDoesNotHang) {
  const Sequence a{0, 1, 2, 3}, b{0, 1, 2, 3}, c{9, 9, 9, 9};
  const UpperBoundOracle always_no = [](const Sequence&, const Sequence&,
                                        const Sequence&) { return false; };
  EXPECT_THROW(detect_violations(a, b, c, always_no), Error);
}

TEST(MaxConvViaUpperBound, Examples) {
  EXPECT_EQ(max_conv_via_upperbound({0}, {0}), (Sequence{0}));
  EXPECT_EQ(max_conv_via_upperbound({0, 1}, {0, 2}), (Sequence{0, 2}));
  EXPECT_THROW(max_conv_via_upperbound({0}, {0, 1}), InvalidInput);
}

TEST(MaxConvViaUpperBound, EqualsKernelSeed55) {
  Rng rng(55);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(256);
    const Sequence a = random_sequence(rng, n, 1 << 12);
    const Sequence b = random_sequence(rng, n, 1 << 12);
    DecisionStats stats;
    ASSERT_EQ(max_conv_via_upperbound(a, b, direct_upper_bound_oracle(), &stats),
              truncated_conv(a, b));
    // lo..hi spans at most 4 * 2^12 + 1 values.
    const auto range = static_cast<std::size_t>(a.max_abs() + b.max_abs()) * 2 + 1;
    ASSERT_LE(stats.rounds, ceil_log2(range) + 1);
  }
}

TEST(MaxConvViaUpperBound, ChainedOracleSeed56) {
  Rng rng(56);
  const UpperBoundOracle chained = [](const Sequence& a, const Sequence& b,
                                      const Sequence& c) {
    return upper_bound_via_superadditivity(a, b, c, [](const Sequence& e) {
      return superadditive_via_unbounded(e);
    });
  };
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 1 + rng.below(16);
    const Sequence a = random_sequence(rng, n, 64);
    const Sequence b = random_sequence(rng, n, 64);
    ASSERT_EQ(max_conv_via_upperbound(a, b, chained), truncated_conv(a, b));
  }
}

}  // namespace
}  // namespace mpconv
