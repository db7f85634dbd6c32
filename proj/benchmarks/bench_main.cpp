#include <benchmark/benchmark.h>

#include "mpconv/convolution.hpp"
#include "mpconv/knapsack_rand.hpp"
#include "mpconv/oracles.hpp"
#include "mpconv/rng.hpp"
#include "mpconv/via_decision.hpp"

namespace {

using namespace mpconv;

Sequence random_sequence(Rng& rng, std::size_t n, Value bound) {
  std::vector<Value> v(n);
  for (Value& x : v) x = rng.between(-bound, bound);
  return Sequence(std::move(v));
}

std::vector<Item> random_items(Rng& rng, std::size_t n, Value max_weight) {
  std::vector<Item> items(n);
  for (Item& it : items) it = {rng.between(1, max_weight), rng.between(0, 1000)};
  return items;
}

void BM_Kernel(benchmark::State& state, const ConvKernel& kernel) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_sequence(rng, n, 1 << 20);
  const Sequence b = random_sequence(rng, n, 1 << 20);
  for (auto _ : state) benchmark::DoNotOptimize(max_conv(a, b, std::nullopt, kernel));
  state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_Kernel, naive, naive_kernel())
    ->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);
BENCHMARK_CAPTURE(BM_Kernel, blocked, blocked_kernel())
    ->RangeMultiplier(2)->Range(256, 4096)->Complexity(benchmark::oNSquared);

void BM_ViaUpperBound(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Sequence a = random_sequence(rng, n, 1 << 12);
  const Sequence b = random_sequence(rng, n, 1 << 12);
  for (auto _ : state) benchmark::DoNotOptimize(max_conv_via_upperbound(a, b));
}
BENCHMARK(BM_ViaUpperBound)->RangeMultiplier(2)->Range(32, 512);

void BM_Knapsack01Dp(benchmark::State& state) {
  Rng rng(3);
  const Value t = state.range(0);
  const KnapsackInstance inst{random_items(rng, 100, t), t, KnapsackMode::kZeroOne};
  for (auto _ : state) benchmark::DoNotOptimize(knapsack01_dp(inst));
}
BENCHMARK(BM_Knapsack01Dp)->RangeMultiplier(2)->Range(64, 1024);

void BM_KnapsackRand(benchmark::State& state) {
  Rng rng(3);
  const Value t = state.range(0);
  const auto items = random_items(rng, 100, t);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        knapsack_rand(items, static_cast<std::size_t>(t), 0.05, Rng(4)));
  }
}
BENCHMARK(BM_KnapsackRand)->RangeMultiplier(2)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
