#include "mpconv/reductions.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <string>

#include "mpconv/oracles.hpp"

namespace mpconv {
namespace {

void require_kind(const Interpretation& in, InterpretKind kind) {
  if (in.kind != kind) {
    throw InvalidInput("interpretation rule is " +
                       std::string(to_string(in.kind)) + ", not " +
                       std::string(to_string(kind)));
  }
}

Value peak_of(std::span<const Value> values) { return max_abs(values); }

template <class Instance>
ReductionOutcome<Instance> immediate(ProblemTag source, ProblemTag target,
                                     bool verdict, std::string note) {
  ReductionOutcome<Instance> out{source, target, {}, {}, std::move(note), 0};
  out.interpret.kind = InterpretKind::kImmediate;
  out.interpret.immediate_verdict = verdict;
  return out;
}

}  // namespace

std::string_view to_string(InterpretKind kind) {
  switch (kind) {
    case InterpretKind::kImmediate: return "immediate";
    case InterpretKind::kSameValue: return "same-value";
    case InterpretKind::kEqualsThreshold: return "equals-threshold";
    case InterpretKind::kSameDecision: return "same-decision";
    case InterpretKind::kAnyYesRefutes: return "any-yes-refutes";
    case InterpretKind::kBelowThresholdRefutes: return "below-threshold-refutes";
    case InterpretKind::kReadWindow: return "read-window";
    case InterpretKind::kBoundedByNegation: return "bounded-by-negation";
  }
  return "unknown";
}

bool Interpretation::decide() const {
  require_kind(*this, InterpretKind::kImmediate);
  return immediate_verdict;
}

bool Interpretation::decide(Value target_value) const {
  switch (kind) {
    case InterpretKind::kEqualsThreshold:
      return target_value == threshold;
    case InterpretKind::kBelowThresholdRefutes:
      return !(target_value < threshold);
    default:
      require_kind(*this, InterpretKind::kEqualsThreshold);
      return false;
  }
}

bool Interpretation::decide(std::span<const bool> target_verdicts) const {
  switch (kind) {
    case InterpretKind::kSameDecision:
      if (target_verdicts.size() != 1) {
        throw InvalidInput("same-decision expects exactly one target verdict");
      }
      return target_verdicts[0];
    case InterpretKind::kAnyYesRefutes:
      return std::none_of(target_verdicts.begin(), target_verdicts.end(),
                          [](bool v) { return v; });
    default:
      require_kind(*this, InterpretKind::kSameDecision);
      return false;
  }
}

bool Interpretation::decide_from_vector(std::span<const Value> target) const {
  require_kind(*this, InterpretKind::kBoundedByNegation);
  if (target.size() < bounds.size()) {
    throw InvalidInput("bounded-by-negation: target vector too short");
  }
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    if (bounds[k] > -target[k]) return false;
  }
  return true;
}

Value Interpretation::value(Value target_value) const {
  require_kind(*this, InterpretKind::kSameValue);
  return target_value;
}

std::vector<Value> Interpretation::read(std::span<const Value> target) const {
  require_kind(*this, InterpretKind::kReadWindow);
  const auto offset = static_cast<std::size_t>(threshold);
  if (target.size() < offset + count) {
    throw InvalidInput("read-window: target vector too short");
  }
  return {target.begin() + static_cast<std::ptrdiff_t>(offset),
          target.begin() + static_cast<std::ptrdiff_t>(offset + count)};
}

// ---------------------------------------------------------------------------

ReductionOutcome<KnapsackInstance> reduce_unbounded_to_01(
    const KnapsackInstance& inst) {
  inst.validate();
  if (inst.capacity < 1) {
    throw InvalidInput("unbounded -> 0/1 reduction needs capacity >= 1");
  }
  const int max_exp = std::bit_width(static_cast<std::uint64_t>(inst.capacity)) - 1;
  ReductionOutcome<KnapsackInstance> out{
      ProblemTag::kUnboundedKnapsack, ProblemTag::kKnapsack01, {}, {}, {}, 0};
  KnapsackInstance target{{}, inst.capacity, KnapsackMode::kZeroOne};
  for (const Item& it : inst.items) {
    if (it.weight == 0) {
      if (it.value > 0) {
        throw InvalidInput(
            "unbounded knapsack: zero-weight item with positive value");
      }
      continue;
    }
    for (int j = 0; j <= max_exp; ++j) {
      const Value scale = Value{1} << j;
      const Value w = checked_mul(it.weight, scale);
      if (w > inst.capacity) break;
      const Value v = checked_mul(it.value, scale);
      target.items.push_back({w, v});
      out.peak_magnitude = std::max({out.peak_magnitude, w, v});
    }
  }
  out.instances.push_back(std::move(target));
  out.interpret.kind = InterpretKind::kSameValue;
  out.blowup_note = "items x" + std::to_string(max_exp + 1) +
                    " (floor(log2 t)+1 binary copies), values x2^" +
                    std::to_string(max_exp);
  return out;
}

Value unbounded_via_01(const KnapsackInstance& inst) {
  if (inst.capacity == 0) return 0;
  const auto red = reduce_unbounded_to_01(inst);
  return red.interpret.value(knapsack01_dp(red.instances[0]).at_capacity());
}

// ---------------------------------------------------------------------------

ReductionOutcome<KnapsackInstance> reduce_superadditivity_to_unbounded(
    const Sequence& a) {
  const auto normalized = normalize_nonneg_monotone(a);
  if (!normalized) {
    return immediate<KnapsackInstance>(
        ProblemTag::kSuperAdditivity, ProblemTag::kUnboundedKnapsack, false,
        "a[0] > 0 refutes superadditivity");
  }
  const std::size_t n = a.size();
  if (n == 1) {
    return immediate<KnapsackInstance>(ProblemTag::kSuperAdditivity,
                                       ProblemTag::kUnboundedKnapsack, true,
                                       "single element with a[0] <= 0");
  }
  const Sequence& s = normalized->sequence;
  const auto nn = static_cast<Value>(n);
  // Copies of light items alone can fill the knapsack, so D must exceed
  // (2n-1) * max a' rather than just sum a'. s is increasing only when a is
  // superadditive, so take the maximum explicitly.
  const Value top = *std::max_element(s.begin(), s.end());
  const Value threshold = checked_add(checked_mul(2 * nn - 1, top), 1);

  KnapsackInstance target{{}, 2 * nn - 1, KnapsackMode::kUnbounded};
  for (std::size_t i = 1; i < n; ++i) {
    target.items.push_back({static_cast<Value>(i), s[i]});
  }
  // The light item of weight 0 (value a'[0] = 0) is omitted; it never
  // contributes and the unbounded DP rejects weight-0 items.
  for (std::size_t i = 0; i < n; ++i) {
    target.items.push_back(
        {2 * nn - 1 - static_cast<Value>(i), checked_sub(threshold, s[i])});
  }
  ReductionOutcome<KnapsackInstance> out{
      ProblemTag::kSuperAdditivity, ProblemTag::kUnboundedKnapsack, {}, {}, {},
      threshold};
  out.instances.push_back(std::move(target));
  out.interpret.kind = InterpretKind::kEqualsThreshold;
  out.interpret.threshold = threshold;
  out.blowup_note = "2n-1 items, t = 2n-1, values up to D = (2n-1) max a' + 1 = " +
                    std::to_string(threshold) + " (normalization shift C = " +
                    std::to_string(normalized->shift) + ")";
  return out;
}

bool superadditive_via_unbounded(const Sequence& a) {
  const auto red = reduce_superadditivity_to_unbounded(a);
  if (red.interpret.kind == InterpretKind::kImmediate) {
    return red.interpret.decide();
  }
  return red.interpret.decide(
      unbounded_knapsack_dp(red.instances[0]).at_capacity());
}

// ---------------------------------------------------------------------------

ReductionOutcome<Sequence> reduce_upperbound_to_superadditivity(
    const Sequence& a, const Sequence& b, const Sequence& c) {
  require_equal_lengths(a, b, c, "upperbound -> superadditivity");
  const std::size_t n = a.size();
  const Value w = std::max({a.max_abs(), b.max_abs(), c.max_abs()});
  const Value shift = checked_add(w, 1);
  const Value slope = checked_add(checked_mul(2, w), 1);

  std::vector<Value> as(n), bs(n), cs(n);
  Value top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Value lin = checked_mul(slope, static_cast<Value>(i));
    as[i] = checked_add(checked_add(shift, a[i]), lin);
    bs[i] = checked_add(checked_add(shift, b[i]), lin);
    cs[i] = checked_add(checked_add(checked_mul(2, shift), c[i]), lin);
    top = std::max({top, as[i], bs[i], cs[i]});
  }
  std::vector<Value> e(4 * n, 0);
  const Value k4 = checked_mul(4, top);
  const Value k5 = checked_mul(5, top);
  for (std::size_t i = 0; i < n; ++i) {
    e[n + i] = checked_add(top, as[i]);
    e[2 * n + i] = checked_add(k4, bs[i]);
    e[3 * n + i] = checked_add(k5, cs[i]);
  }
  ReductionOutcome<Sequence> out{
      ProblemTag::kUpperBound, ProblemTag::kSuperAdditivity, {}, {}, {}, 0};
  out.peak_magnitude = peak_of(e);
  out.instances.push_back(Sequence(std::move(e)));
  out.interpret.kind = InterpretKind::kSameDecision;
  out.blowup_note = "length 4n = " + std::to_string(4 * n) +
                    ", C = " + std::to_string(shift) + ", D = " +
                    std::to_string(slope) + ", K = " + std::to_string(top);
  return out;
}

bool upper_bound_via_superadditivity(const Sequence& a, const Sequence& b,
                                     const Sequence& c,
                                     const SuperadditivityTester& tester) {
  const auto red = reduce_upperbound_to_superadditivity(a, b, c);
  const bool verdict[] = {tester(red.instances[0])};
  return red.interpret.decide(std::span<const bool>(verdict));
}

// ---------------------------------------------------------------------------

ReductionOutcome<SequencePair> reduce_mcsp_to_maxconv(const Sequence& a) {
  const std::size_t n = a.size();
  Value abs_total = 1;
  for (Value v : a) abs_total = checked_add(abs_total, v < 0 ? -v : v);
  const Value sentinel = checked_mul(2, abs_total);

  std::vector<Value> prefix(n + 1, 0);  // prefix[k] = a[0] + ... + a[k-1]
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = checked_add(prefix[i], a[i]);

  std::vector<Value> b(2 * n, -sentinel), c(2 * n, -sentinel);
  for (std::size_t k = 0; k < n; ++k) b[k] = prefix[k + 1];
  for (std::size_t k = 0; k <= n; ++k) c[k] = -prefix[n - k];

  ReductionOutcome<SequencePair> out{
      ProblemTag::kMcsp, ProblemTag::kMaxConv, {}, {}, {}, sentinel};
  out.instances.push_back({Sequence(std::move(b)), Sequence(std::move(c))});
  out.interpret.kind = InterpretKind::kReadWindow;
  out.interpret.threshold = static_cast<Value>(n);
  out.interpret.count = n;
  out.blowup_note = "two sequences of length 2n, sentinel -D with D = " +
                    std::to_string(sentinel);
  return out;
}

Sequence mcsp_via_maxconv(const Sequence& a, const ConvKernel& kernel) {
  const auto red = reduce_mcsp_to_maxconv(a);
  const SequencePair& pair = red.instances[0];
  const auto conv =
      max_conv(pair.first.view(), pair.second.view(), 2 * a.size() - 1, kernel);
  return Sequence(red.interpret.read(conv));
}

// ---------------------------------------------------------------------------

ReductionOutcome<Sequence> reduce_superadditivity_to_mcsp(const Sequence& a) {
  if (a[0] > 0) {
    return immediate<Sequence>(ProblemTag::kSuperAdditivity, ProblemTag::kMcsp,
                               false, "a[0] > 0 refutes superadditivity");
  }
  const std::size_t n = a.size();
  if (n == 1) {
    return immediate<Sequence>(ProblemTag::kSuperAdditivity, ProblemTag::kMcsp,
                               true, "single element with a[0] <= 0");
  }
  std::vector<Value> neg_diff(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    neg_diff[i] = checked_sub(a[i], a[i + 1]);
  }
  ReductionOutcome<Sequence> out{
      ProblemTag::kSuperAdditivity, ProblemTag::kMcsp, {}, {}, {}, 0};
  out.peak_magnitude = peak_of(neg_diff);
  out.instances.push_back(Sequence(std::move(neg_diff)));
  out.interpret.kind = InterpretKind::kBoundedByNegation;
  out.interpret.bounds.assign(a.begin() + 1, a.end());
  out.blowup_note = "length n-1 difference sequence, values up to 2W";
  return out;
}

bool superadditive_via_mcsp(const Sequence& a, const McspSolver& mcsp) {
  const auto red = reduce_superadditivity_to_mcsp(a);
  if (red.interpret.kind == InterpretKind::kImmediate) {
    return red.interpret.decide();
  }
  return red.interpret.decide_from_vector(mcsp(red.instances[0]).view());
}

bool superadditive_via_mcsp(const Sequence& a) {
  return superadditive_via_mcsp(a, [](const Sequence& s) { return mcsp_brute(s); });
}

// ---------------------------------------------------------------------------

ReductionOutcome<NecklaceInstance> reduce_lowerbound_to_necklace(
    const Sequence& a_in, const Sequence& b_in, const Sequence& c_in) {
  require_equal_lengths(a_in, b_in, c_in, "lowerbound -> necklace");
  const std::size_t n = a_in.size();
  const Value comb = kNecklaceCombinationLength;
  std::vector<Value> a = a_in.values();
  std::vector<Value> b = b_in.values();
  std::vector<Value> c = c_in.values();

  // (1) non-negative, a <= c pointwise.
  const Value w0 = std::max({a_in.max_abs(), b_in.max_abs(), c_in.max_abs()});
  const Value c1 = checked_add(w0, 1);
  const Value c2 = c1;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = checked_add(a[i], c1);
    b[i] = checked_add(b[i], checked_add(c1, c2));
    c[i] = checked_add(c[i], checked_add(checked_mul(2, c1), c2));
  }
  // (2) b[n] dominates every bounded-length combination of order n.
  auto current_max = [&] {
    return std::max({max_abs(a), max_abs(b), max_abs(c)});
  };
  b.push_back(checked_mul(current_max(), comb));
  // (3) a linear slope makes every positive-order combination non-negative.
  const Value slope = checked_mul(current_max(), comb);
  for (std::size_t i = 0; i <= n; ++i) {
    const Value lin = checked_mul(slope, static_cast<Value>(i));
    if (i < n) {
      a[i] = checked_add(a[i], lin);
      c[i] = checked_add(c[i], lin);
    }
    b[i] = checked_add(b[i], lin);
  }

  const Value big = b[n];
  const Value b1 = b[n - 1];
  const Value b2 = checked_sub(b[n], b[1]);
  NecklaceInstance neck;
  neck.circle_length = checked_mul(2, big);
  neck.x.reserve(2 * n);
  neck.y.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) neck.x.push_back(a[i]);
  for (std::size_t i = 0; i < n; ++i) neck.x.push_back(checked_add(big, c[i]));
  for (std::size_t i = 0; i < n; ++i) {
    neck.y.push_back(checked_sub(b1, b[n - 1 - i]));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    neck.y.push_back(checked_sub(checked_add(big, b2), b[n - 1 - i]));
  }
  neck.y.push_back(neck.circle_length);
  neck.validate();

  ReductionOutcome<NecklaceInstance> out{
      ProblemTag::kLowerBound, ProblemTag::kNecklace, {}, {}, {}, 0};
  out.peak_magnitude = std::max({max_abs(neck.x), max_abs(neck.y),
                                 neck.circle_length});
  out.interpret.kind = InterpretKind::kBelowThresholdRefutes;
  out.interpret.threshold = checked_sub(big, b1);
  out.blowup_note = "2n beads per necklace, circle length 2B = " +
                    std::to_string(neck.circle_length) + ", L = " +
                    std::to_string(comb) + ", slope D = " +
                    std::to_string(slope);
  out.instances.push_back(std::move(neck));
  return out;
}

bool lower_bound_via_necklace(const Sequence& a, const Sequence& b,
                              const Sequence& c) {
  const auto red = reduce_lowerbound_to_necklace(a, b, c);
  return red.interpret.decide(necklace_linf_brute(red.instances[0]));
}

// ---------------------------------------------------------------------------

ReductionOutcome<SequenceTriple> reduce_upperbound_to_3sumconv(
    const Sequence& a_in, const Sequence& b_in, const Sequence& c_in) {
  require_equal_lengths(a_in, b_in, c_in, "upperbound -> 3sumconv");
  const std::size_t n = a_in.size();
  // Shift non-negative; a[i] + b[j] > c[i+j] is unchanged.
  const Value shift =
      std::max({a_in.max_abs(), b_in.max_abs(), c_in.max_abs()});
  std::vector<Value> a(n), b(n), c(n);
  Value top = 0;
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = checked_add(a_in[i], shift);
    b[i] = checked_add(b_in[i], shift);
    c[i] = checked_add(c_in[i], checked_mul(2, shift));
    top = std::max({top, a[i], b[i], c[i]});
  }
  const int width =
      std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(top))));
  auto pre = [width](Value x, int k) -> Value { return x >> (width - k); };

  ReductionOutcome<SequenceTriple> out{
      ProblemTag::kUpperBound, ProblemTag::kThreeSumConv, {}, {}, {}, 0};
  auto emit = [&](std::vector<Value> x, std::vector<Value> y,
                  std::vector<Value> z) {
    out.peak_magnitude =
        std::max({out.peak_magnitude, max_abs(x), max_abs(y), max_abs(z)});
    out.instances.push_back(
        {Sequence(std::move(x)), Sequence(std::move(y)), Sequence(std::move(z))});
  };

  // pre_k(x) + pre_k(y) = pre_k(z) + 1, k = 1..width.
  for (int k = 1; k <= width; ++k) {
    std::vector<Value> x(n), y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = pre(a[i], k);
      y[i] = pre(b[i], k);
      z[i] = pre(c[i], k) + 1;
    }
    emit(std::move(x), std::move(y), std::move(z));
  }
  // Next bits are (1, 1, 0) and pre_k(x) + pre_k(y) = pre_k(z), k = 0..width-1.
  for (int k = 0; k < width; ++k) {
    Value max_prefix = 0;
    for (std::size_t i = 0; i < n; ++i) {
      max_prefix = std::max({max_prefix, pre(a[i], k), pre(b[i], k), pre(c[i], k)});
    }
    const Value sentinel = 2 * max_prefix + 1;
    auto next_bit = [&](Value v) { return pre(v, k + 1) - 2 * pre(v, k); };
    std::vector<Value> x(n), y(n), z(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = next_bit(a[i]) == 1 ? pre(a[i], k) : -sentinel;
      y[i] = next_bit(b[i]) == 1 ? pre(b[i], k) : -sentinel;
      z[i] = next_bit(c[i]) == 0 ? pre(c[i], k) : sentinel;
    }
    emit(std::move(x), std::move(y), std::move(z));
  }
  out.interpret.kind = InterpretKind::kAnyYesRefutes;
  out.blowup_note = std::to_string(out.instances.size()) +
                    " instances over a " + std::to_string(width) +
                    "-bit width, W' = " + std::to_string(top);
  return out;
}

bool upper_bound_via_3sumconv(const Sequence& a, const Sequence& b,
                              const Sequence& c) {
  const auto red = reduce_upperbound_to_3sumconv(a, b, c);
  const std::size_t count = red.instances.size();
  const auto verdicts = std::make_unique<bool[]>(count);
  for (std::size_t i = 0; i < count; ++i) {
    const SequenceTriple& t = red.instances[i];
    verdicts[i] = three_sum_conv_brute(t.a, t.b, t.c).yes;
  }
  return red.interpret.decide(std::span<const bool>(verdicts.get(), count));
}

}  // namespace mpconv
