#pragma once

// Seeded instance generators, the per-problem method registry, cross-checking
// against reference methods, and timing sweeps. The CLI is a thin wrapper.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mpconv/io.hpp"
#include "mpconv/problem.hpp"

namespace mpconv {

struct GenParams {
  std::size_t n = 8;
  /// Bound on generated magnitudes; for necklaces, the circle length.
  Value value_bound = 100;
  /// Knapsack capacity; 0 picks 2n.
  Value capacity = 0;
};

/// Deterministic for a given (problem, params, seed). Generator contract:
///   maxconv, mcsp: uniform values in [-W, W].
///   upperbound / lowerbound: a, b uniform in [-W, W]; c is max_conv(a, b)
///     moved up (down for lowerbound) by a uniform offset in [-1, 3n], so
///     both verdicts occur at every n.
///   3sumconv: uniform values in [-W, W].
///   superadd: prefix sums of sorted increments from [-q, q],
///     q = max(1, W / (n - 1)), i.e. a convex sequence with a[0] = 0; with
///     probability 1/2 one entry is then lowered by 1.
///   knapsack01 / uknapsack: n items, weights in 1..t, values in 0..W.
///   treesparsity: parent[v] uniform in [0, v), weights in 0..W.
///   necklace: n sorted uniform positions in [0, W) per necklace, circle W.
/// The seed and params are recorded in the file metadata.
/// Throws InvalidInput for n = 0, W < 1 or a negative capacity.
InstanceFile generate(ProblemTag problem, const GenParams& params,
                      std::uint64_t seed);

struct SolveOptions {
  double delta = 0.05;
  std::uint64_t seed = 0;
  /// Kernel for methods that convolve internally (via-maxconv, rand).
  std::string kernel = "naive";
};

struct MethodInfo {
  std::string_view name;
  bool randomized = false;
};

/// Registered methods; the first one is the reference used by --check.
std::span<const MethodInfo> methods_for(ProblemTag problem);

/// Throws InvalidInput if the method is not registered for the problem.
const MethodInfo& find_method(ProblemTag problem, std::string_view method);

/// Runs one method and returns its answer object:
///   sequences:  {"sequence": [...]}           (maxconv, mcsp)
///   decisions:  {"yes": bool, "witness": ...} (upperbound, lowerbound,
///               superadd, 3sumconv; witness null when absent)
///   knapsack:   {"value": v, "profile": [...]} (profile omitted by via-01)
///   trees:      {"vector": [...], "value": x}  (value only when k is set)
///   necklace:   {"doubled_cost": v}
nlohmann::json solve_answer(const InstanceFile& file, std::string_view method,
                            const SolveOptions& options = {});

/// Target instances and interpretation rule of a reduction method, as JSON
/// (see to_json(ReductionOutcome)). Valid for via-superadd, via-3sumconv,
/// via-necklace, via-uknapsack, via-mcsp, via-01 and mcsp's via-maxconv.
nlohmann::json reduce_to_json(const InstanceFile& file, std::string_view method);

struct Agreement {
  /// Answers coincide on the comparable part.
  bool agree = true;
  /// False only when a randomized method reports a value it cannot reach.
  bool sound = true;
};

/// Compares an answer with the reference answer of the same instance.
/// Decisions compare verdicts only (witnesses may legitimately differ).
Agreement compare_answers(ProblemTag problem, const nlohmann::json& answer,
                          const nlohmann::json& reference);

struct RunReport {
  std::string method;
  nlohmann::json answer;
  double wall_seconds = 0.0;
  /// Present iff a cross-check was requested.
  std::optional<Agreement> check;
  std::string reference_method;

  nlohmann::json to_json() const;
  /// Deterministic methods fail on disagreement, randomized ones only when
  /// unsound.
  bool check_failed(ProblemTag problem) const;
};

RunReport solve(const InstanceFile& file, std::string_view method,
                const SolveOptions& options = {}, bool check = false);

struct MethodSummary {
  std::string method;
  bool randomized = false;
  std::size_t runs = 0;
  std::size_t disagreements = 0;
  std::size_t unsound = 0;
};

struct CrosscheckReport {
  ProblemTag problem;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<MethodSummary> methods;

  /// No deterministic disagreement and no unsound randomized answer.
  bool ok() const;
  nlohmann::json to_json() const;
};

/// Trial i draws n uniformly from 1..max_params.n (capacity likewise when
/// set) and generates its instance from Rng(seed).child(i); randomized methods
/// get a per-trial seed derived from options.seed.
CrosscheckReport crosscheck(ProblemTag problem, std::size_t trials,
                            const GenParams& max_params, std::uint64_t seed,
                            const SolveOptions& options = {});

enum class SweepParam { kN, kCapacity };

/// CSV with '#' machine-info lines, a header row "<n|t>,median_seconds" and
/// one row per size, each the median of `repeats` runs on one generated
/// instance. Sizes must be strictly increasing.
std::string bench_csv(ProblemTag problem, std::string_view method,
                      const std::vector<std::size_t>& sizes,
                      SweepParam sweep, const GenParams& base,
                      std::uint64_t seed, const SolveOptions& options = {},
                      std::size_t repeats = 5);

}  // namespace mpconv
