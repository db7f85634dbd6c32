#include "mpconv/harness.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <sstream>
#include <thread>

#include "mpconv/convolution.hpp"
#include "mpconv/knapsack_rand.hpp"
#include "mpconv/oracles.hpp"
#include "mpconv/predicates.hpp"
#include "mpconv/reductions.hpp"
#include "mpconv/rng.hpp"
#include "mpconv/tree_sparsity.hpp"
#include "mpconv/via_decision.hpp"

namespace mpconv {
namespace {

using nlohmann::json;

std::vector<Value> uniform_values(Rng& rng, std::size_t n, Value bound) {
  std::vector<Value> out(n);
  for (Value& v : out) v = rng.between(-bound, bound);
  return out;
}

Sequence bounded_conv_target(Rng& rng, const Sequence& a, const Sequence& b,
                             bool upper) {
  const std::size_t n = a.size();
  const Sequence conv = max_conv(a, b, n - 1);
  const auto spread = static_cast<Value>(3 * n);
  std::vector<Value> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Value offset = rng.between(-1, spread);
    c[k] = upper ? conv[k] + offset : conv[k] - offset;
  }
  return Sequence(std::move(c));
}

Sequence convex_sequence(Rng& rng, std::size_t n, Value bound) {
  const Value q = n > 1 ? std::max<Value>(1, bound / static_cast<Value>(n - 1))
                        : 1;
  std::vector<Value> steps(n - 1);
  for (Value& s : steps) s = rng.between(-q, q);
  std::sort(steps.begin(), steps.end());
  std::vector<Value> a(n, 0);
  for (std::size_t i = 1; i < n; ++i) a[i] = a[i - 1] + steps[i - 1];
  if (rng.below(2) == 1) a[rng.below(n)] -= 1;
  return Sequence(std::move(a));
}

json witness_pair(const std::optional<IndexPair>& w) {
  if (!w) return nullptr;
  return json::array({w->i, w->j});
}

json decision(bool yes, json witness = nullptr) {
  return {{"yes", yes}, {"witness", std::move(witness)}};
}

json profile_answer(const ValueProfile& p) {
  return {{"value", p.at_capacity()}, {"profile", p.values()}};
}

// Pads both inputs to the full output length N = |a| + |b| - 1 with a value
// low enough that no padded pair can beat a genuine one, so the equal-length
// decision machinery yields the complete convolution.
std::pair<Sequence, Sequence> pad_for_full_output(const Sequence& a,
                                                  const Sequence& b) {
  const std::size_t len = a.size() + b.size() - 1;
  const Value w = std::max(a.max_abs(), b.max_abs());
  const Value pad = -(3 * w + 1);
  std::vector<Value> pa(a.values()), pb(b.values());
  pa.resize(len, pad);
  pb.resize(len, pad);
  return {Sequence(std::move(pa)), Sequence(std::move(pb))};
}

UpperBoundOracle chained_oracle() {
  return [](const Sequence& a, const Sequence& b, const Sequence& c) {
    return upper_bound_via_superadditivity(
        a, b, c, [](const Sequence& e) { return superadditive_via_unbounded(e); });
  };
}

constexpr std::array kMaxConvMethods{
    MethodInfo{"naive"}, MethodInfo{"blocked"}, MethodInfo{"via-upperbound"},
    MethodInfo{"via-superadd-uknapsack"}};
constexpr std::array kUpperBoundMethods{
    MethodInfo{"direct"}, MethodInfo{"via-superadd"},
    MethodInfo{"via-3sumconv"}, MethodInfo{"via-superadd-uknapsack"},
    MethodInfo{"via-superadd-mcsp"}};
constexpr std::array kLowerBoundMethods{MethodInfo{"direct"},
                                        MethodInfo{"via-necklace"}};
constexpr std::array kSuperAddMethods{MethodInfo{"direct"},
                                      MethodInfo{"via-uknapsack"},
                                      MethodInfo{"via-mcsp"}};
constexpr std::array kKnapsack01Methods{MethodInfo{"dp"},
                                        MethodInfo{"rand", true}};
constexpr std::array kUKnapsackMethods{MethodInfo{"dp"}, MethodInfo{"via-01"}};
constexpr std::array kMcspMethods{MethodInfo{"brute"},
                                  MethodInfo{"via-maxconv"}};
constexpr std::array kTreeMethods{MethodInfo{"dp"}, MethodInfo{"via-maxconv"}};
constexpr std::array kNecklaceMethods{MethodInfo{"brute"}};
constexpr std::array kThreeSumMethods{MethodInfo{"brute"}};

json solve_maxconv(const SequencePair& p, std::string_view method) {
  if (method == "naive" || method == "blocked") {
    return {{"sequence",
             max_conv(p.first, p.second, std::nullopt, kernel_by_name(method))
                 .values()}};
  }
  const auto [a, b] = pad_for_full_output(p.first, p.second);
  const Sequence out = method == "via-upperbound"
                           ? max_conv_via_upperbound(a, b)
                           : max_conv_via_upperbound(a, b, chained_oracle());
  return {{"sequence", out.values()}};
}

json solve_upperbound(const SequenceTriple& t, std::string_view method) {
  if (method == "direct") {
    const auto v = check_upper_bound(t.a, t.b, t.c);
    return decision(v.yes, witness_pair(v.witness));
  }
  if (method == "via-superadd") {
    return decision(upper_bound_via_superadditivity(t.a, t.b, t.c));
  }
  if (method == "via-3sumconv") {
    return decision(upper_bound_via_3sumconv(t.a, t.b, t.c));
  }
  if (method == "via-superadd-uknapsack") {
    return decision(chained_oracle()(t.a, t.b, t.c));
  }
  return decision(upper_bound_via_superadditivity(
      t.a, t.b, t.c,
      [](const Sequence& e) { return superadditive_via_mcsp(e); }));
}

json solve_lowerbound(const SequenceTriple& t, std::string_view method) {
  if (method == "direct") {
    const auto v = check_lower_bound(t.a, t.b, t.c);
    return decision(v.yes, v.witness ? json(*v.witness) : json(nullptr));
  }
  return decision(lower_bound_via_necklace(t.a, t.b, t.c));
}

json solve_superadd(const Sequence& a, std::string_view method) {
  if (method == "direct") {
    const auto v = is_superadditive(a);
    return decision(v.yes, witness_pair(v.witness));
  }
  if (method == "via-uknapsack") return decision(superadditive_via_unbounded(a));
  return decision(superadditive_via_mcsp(a));
}

json solve_knapsack(const KnapsackInstance& inst, ProblemTag tag,
                    std::string_view method, const SolveOptions& options) {
  if (tag == ProblemTag::kUnboundedKnapsack) {
    if (method == "dp") return profile_answer(unbounded_knapsack_dp(inst));
    return {{"value", unbounded_via_01(inst)}};
  }
  if (method == "dp") return profile_answer(knapsack01_dp(inst));
  return profile_answer(
      knapsack_rand(inst, RandConfig{options.delta, options.seed, options.kernel}));
}

json solve_tree(const TreeSparsityInstance& inst, std::string_view method,
                const SolveOptions& options) {
  const std::vector<Value> vec =
      method == "dp" ? tree_sparsity_dp(inst.tree)
                     : tree_sparsity_via_maxconv(inst.tree,
                                                 kernel_by_name(options.kernel));
  json out{{"vector", vec}};
  if (inst.k) out["value"] = vec[*inst.k];
  return out;
}

bool profile_dominated(const json& p, const json& ref) {
  if (p.size() != ref.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get<Value>() > ref[i].get<Value>()) return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

InstanceFile generate(ProblemTag problem, const GenParams& params,
                      std::uint64_t seed) {
  if (params.n == 0) throw InvalidInput("gen: n must be >= 1");
  if (params.value_bound < 1) throw InvalidInput("gen: value bound must be >= 1");
  if (params.capacity < 0) throw InvalidInput("gen: capacity must be >= 0");
  const std::size_t n = params.n;
  const Value w = params.value_bound;
  Rng rng(seed);

  auto seq = [&] { return Sequence(uniform_values(rng, n, w)); };
  Payload payload = Sequence{0};
  switch (problem) {
    case ProblemTag::kMaxConv: {
      Sequence a = seq();
      payload = SequencePair{std::move(a), seq()};
      break;
    }
    case ProblemTag::kUpperBound:
    case ProblemTag::kLowerBound: {
      Sequence a = seq();
      Sequence b = seq();
      Sequence c = bounded_conv_target(rng, a, b,
                                       problem == ProblemTag::kUpperBound);
      payload = SequenceTriple{std::move(a), std::move(b), std::move(c)};
      break;
    }
    case ProblemTag::kThreeSumConv: {
      Sequence a = seq();
      Sequence b = seq();
      payload = SequenceTriple{std::move(a), std::move(b), seq()};
      break;
    }
    case ProblemTag::kSuperAdditivity:
      payload = convex_sequence(rng, n, w);
      break;
    case ProblemTag::kMcsp:
      payload = seq();
      break;
    case ProblemTag::kKnapsack01:
    case ProblemTag::kUnboundedKnapsack: {
      KnapsackInstance inst;
      inst.capacity =
          params.capacity > 0 ? params.capacity : static_cast<Value>(2 * n);
      inst.mode = problem == ProblemTag::kKnapsack01 ? KnapsackMode::kZeroOne
                                                     : KnapsackMode::kUnbounded;
      for (std::size_t i = 0; i < n; ++i) {
        const Value weight = rng.between(1, std::max<Value>(1, inst.capacity));
        inst.items.push_back({weight, rng.between(0, w)});
      }
      payload = std::move(inst);
      break;
    }
    case ProblemTag::kTreeSparsity: {
      std::vector<std::int64_t> parents(n, -1);
      std::vector<Value> weights(n);
      for (std::size_t v = 1; v < n; ++v) {
        parents[v] = static_cast<std::int64_t>(rng.below(v));
      }
      for (Value& x : weights) x = rng.between(0, w);
      payload = TreeSparsityInstance{WeightedTree(parents, weights), std::nullopt};
      break;
    }
    case ProblemTag::kNecklace: {
      auto beads = [&] {
        std::vector<Value> p(n);
        for (Value& x : p) x = rng.between(0, w - 1);
        std::sort(p.begin(), p.end());
        return p;
      };
      std::vector<Value> x = beads();
      payload = NecklaceInstance{std::move(x), beads(), w};
      break;
    }
  }
  json meta{{"seed", seed},
            {"generator",
             {{"n", n}, {"value_bound", w}, {"capacity", params.capacity}}}};
  InstanceFile file{problem, std::move(payload), std::move(meta)};
  file.validate();
  return file;
}

std::span<const MethodInfo> methods_for(ProblemTag problem) {
  switch (problem) {
    case ProblemTag::kMaxConv: return kMaxConvMethods;
    case ProblemTag::kUpperBound: return kUpperBoundMethods;
    case ProblemTag::kLowerBound: return kLowerBoundMethods;
    case ProblemTag::kSuperAdditivity: return kSuperAddMethods;
    case ProblemTag::kKnapsack01: return kKnapsack01Methods;
    case ProblemTag::kUnboundedKnapsack: return kUKnapsackMethods;
    case ProblemTag::kMcsp: return kMcspMethods;
    case ProblemTag::kTreeSparsity: return kTreeMethods;
    case ProblemTag::kNecklace: return kNecklaceMethods;
    case ProblemTag::kThreeSumConv: return kThreeSumMethods;
  }
  return {};
}

const MethodInfo& find_method(ProblemTag problem, std::string_view method) {
  for (const MethodInfo& m : methods_for(problem)) {
    if (m.name == method) return m;
  }
  std::string known;
  for (const MethodInfo& m : methods_for(problem)) {
    known += known.empty() ? "" : ", ";
    known += m.name;
  }
  throw InvalidInput("method '" + std::string(method) + "' is not available for " +
                     std::string(to_string(problem)) + " (known: " + known + ")");
}

json solve_answer(const InstanceFile& file, std::string_view method,
                  const SolveOptions& options) {
  file.validate();
  find_method(file.problem, method);
  kernel_by_name(options.kernel);
  switch (file.problem) {
    case ProblemTag::kMaxConv:
      return solve_maxconv(std::get<SequencePair>(file.payload), method);
    case ProblemTag::kUpperBound:
      return solve_upperbound(std::get<SequenceTriple>(file.payload), method);
    case ProblemTag::kLowerBound:
      return solve_lowerbound(std::get<SequenceTriple>(file.payload), method);
    case ProblemTag::kSuperAdditivity:
      return solve_superadd(std::get<Sequence>(file.payload), method);
    case ProblemTag::kKnapsack01:
    case ProblemTag::kUnboundedKnapsack:
      return solve_knapsack(std::get<KnapsackInstance>(file.payload),
                            file.problem, method, options);
    case ProblemTag::kMcsp: {
      const auto& a = std::get<Sequence>(file.payload);
      const Sequence out = method == "brute"
                               ? mcsp_brute(a)
                               : mcsp_via_maxconv(a, kernel_by_name(options.kernel));
      return {{"sequence", out.values()}};
    }
    case ProblemTag::kTreeSparsity:
      return solve_tree(std::get<TreeSparsityInstance>(file.payload), method,
                        options);
    case ProblemTag::kNecklace:
      return {{"doubled_cost",
               necklace_linf_brute(std::get<NecklaceInstance>(file.payload))}};
    case ProblemTag::kThreeSumConv: {
      const auto& t = std::get<SequenceTriple>(file.payload);
      const auto v = three_sum_conv_brute(t.a, t.b, t.c);
      return decision(v.yes, witness_pair(v.witness));
    }
  }
  throw InvalidInput("unsupported problem");
}

json reduce_to_json(const InstanceFile& file, std::string_view method) {
  file.validate();
  find_method(file.problem, method);
  switch (file.problem) {
    case ProblemTag::kUpperBound: {
      const auto& t = std::get<SequenceTriple>(file.payload);
      if (method == "via-superadd") {
        return to_json(reduce_upperbound_to_superadditivity(t.a, t.b, t.c));
      }
      if (method == "via-3sumconv") {
        return to_json(reduce_upperbound_to_3sumconv(t.a, t.b, t.c));
      }
      break;
    }
    case ProblemTag::kLowerBound:
      if (method == "via-necklace") {
        const auto& t = std::get<SequenceTriple>(file.payload);
        return to_json(reduce_lowerbound_to_necklace(t.a, t.b, t.c));
      }
      break;
    case ProblemTag::kSuperAdditivity: {
      const auto& a = std::get<Sequence>(file.payload);
      if (method == "via-uknapsack") {
        return to_json(reduce_superadditivity_to_unbounded(a));
      }
      if (method == "via-mcsp") return to_json(reduce_superadditivity_to_mcsp(a));
      break;
    }
    case ProblemTag::kUnboundedKnapsack:
      if (method == "via-01") {
        return to_json(
            reduce_unbounded_to_01(std::get<KnapsackInstance>(file.payload)));
      }
      break;
    case ProblemTag::kMcsp:
      if (method == "via-maxconv") {
        return to_json(reduce_mcsp_to_maxconv(std::get<Sequence>(file.payload)));
      }
      break;
    default:
      break;
  }
  throw InvalidInput("method '" + std::string(method) +
                     "' is not a single reduction step");
}

Agreement compare_answers(ProblemTag problem, const json& answer,
                          const json& reference) {
  Agreement out;
  switch (problem) {
    case ProblemTag::kMaxConv:
    case ProblemTag::kMcsp:
      out.agree = answer.at("sequence") == reference.at("sequence");
      break;
    case ProblemTag::kTreeSparsity:
      out.agree = answer.at("vector") == reference.at("vector");
      break;
    case ProblemTag::kNecklace:
      out.agree = answer.at("doubled_cost") == reference.at("doubled_cost");
      break;
    case ProblemTag::kUpperBound:
    case ProblemTag::kLowerBound:
    case ProblemTag::kSuperAdditivity:
    case ProblemTag::kThreeSumConv:
      out.agree = answer.at("yes") == reference.at("yes");
      break;
    case ProblemTag::kKnapsack01:
    case ProblemTag::kUnboundedKnapsack: {
      const Value v = answer.at("value").get<Value>();
      const Value ref = reference.at("value").get<Value>();
      out.agree = v == ref;
      out.sound = v <= ref;
      if (answer.contains("profile") && reference.contains("profile")) {
        out.sound = out.sound &&
                    profile_dominated(answer["profile"], reference["profile"]);
      }
      break;
    }
  }
  return out;
}

json RunReport::to_json() const {
  json out{{"method", method}, {"answer", answer}, {"wall_seconds", wall_seconds}};
  if (check) {
    out["check"] = {{"reference", reference_method},
                    {"agree", check->agree},
                    {"sound", check->sound}};
  }
  return out;
}

bool RunReport::check_failed(ProblemTag problem) const {
  if (!check) return false;
  return find_method(problem, method).randomized ? !check->sound : !check->agree;
}

RunReport solve(const InstanceFile& file, std::string_view method,
                const SolveOptions& options, bool check) {
  RunReport report;
  report.method = std::string(method);
  const auto start = std::chrono::steady_clock::now();
  report.answer = solve_answer(file, method, options);
  report.wall_seconds = seconds_since(start);
  if (check) {
    const MethodInfo& ref = methods_for(file.problem).front();
    report.reference_method = std::string(ref.name);
    report.check = compare_answers(file.problem, report.answer,
                                   solve_answer(file, ref.name, options));
  }
  return report;
}

bool CrosscheckReport::ok() const {
  return std::all_of(methods.begin(), methods.end(), [](const MethodSummary& m) {
    return m.unsound == 0 && (m.randomized || m.disagreements == 0);
  });
}

json CrosscheckReport::to_json() const {
  json ms = json::array();
  for (const MethodSummary& m : methods) {
    json entry{{"method", m.method},
               {"randomized", m.randomized},
               {"runs", m.runs},
               {"disagreements", m.disagreements}};
    if (m.randomized) {
      entry["unsound"] = m.unsound;
      entry["failure_rate"] =
          m.runs == 0 ? 0.0
                      : static_cast<double>(m.disagreements) /
                            static_cast<double>(m.runs);
    }
    ms.push_back(std::move(entry));
  }
  return {{"problem", to_string(problem)},
          {"trials", trials},
          {"seed", seed},
          {"ok", ok()},
          {"methods", std::move(ms)}};
}

CrosscheckReport crosscheck(ProblemTag problem, std::size_t trials,
                            const GenParams& max_params, std::uint64_t seed,
                            const SolveOptions& options) {
  if (max_params.n == 0) throw InvalidInput("crosscheck: n must be >= 1");
  CrosscheckReport report{problem, trials, seed, {}};
  const auto methods = methods_for(problem);
  for (const MethodInfo& m : methods) {
    report.methods.push_back({std::string(m.name), m.randomized, 0, 0, 0});
  }
  const Rng root(seed);
  const Rng method_root(options.seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    Rng rng = root.child(trial);
    GenParams p = max_params;
    p.n = 1 + rng.below(max_params.n);
    if (max_params.capacity > 0) p.capacity = rng.between(1, max_params.capacity);
    const InstanceFile file = generate(problem, p, rng.next());
    SolveOptions opts = options;
    opts.seed = method_root.child(trial).seed();
    const json reference = solve_answer(file, methods.front().name, opts);
    for (std::size_t i = 0; i < methods.size(); ++i) {
      MethodSummary& summary = report.methods[i];
      const Agreement ag =
          compare_answers(problem,
                          i == 0 ? reference
                                 : solve_answer(file, methods[i].name, opts),
                          reference);
      ++summary.runs;
      summary.disagreements += ag.agree ? 0 : 1;
      summary.unsound += ag.sound ? 0 : 1;
    }
  }
  return report;
}

std::string bench_csv(ProblemTag problem, std::string_view method,
                      const std::vector<std::size_t>& sizes, SweepParam sweep,
                      const GenParams& base, std::uint64_t seed,
                      const SolveOptions& options, std::size_t repeats) {
  find_method(problem, method);
  if (sizes.empty()) throw InvalidInput("bench: empty size sweep");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) {
      throw InvalidInput("bench: sizes must be strictly increasing");
    }
  }
  if (repeats == 0) throw InvalidInput("bench: repeats must be >= 1");

  std::ostringstream out;
  utsname uts{};
  const bool have_uts = uname(&uts) == 0;
  out << "# problem=" << to_string(problem) << " method=" << method
      << " kernel=" << options.kernel << " seed=" << seed
      << " repeats=" << repeats << '\n';
  out << "# host=" << (have_uts ? uts.machine : "unknown") << ' '
      << (have_uts ? uts.sysname : "") << ' ' << (have_uts ? uts.release : "")
      << " hardware_threads=" << std::thread::hardware_concurrency() << '\n';
#if defined(__VERSION__)
  out << "# compiler=" << __VERSION__ << '\n';
#endif
  out << (sweep == SweepParam::kN ? "n" : "t") << ",median_seconds\n";

  for (const std::size_t size : sizes) {
    GenParams p = base;
    if (sweep == SweepParam::kN) {
      p.n = size;
    } else {
      p.capacity = static_cast<Value>(size);
    }
    const InstanceFile file = generate(problem, p, seed);
    std::vector<double> times;
    for (std::size_t r = 0; r < repeats; ++r) {
      const auto start = std::chrono::steady_clock::now();
      solve_answer(file, method, options);
      times.push_back(seconds_since(start));
    }
    std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
    out << size << ',' << times[times.size() / 2] << '\n';
  }
  return out.str();
}

}  // namespace mpconv
