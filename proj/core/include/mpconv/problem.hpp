#pragma once

#include <array>
#include <string_view>

namespace mpconv {

/// Problems of the (max,+)-convolution family, as tagged in instance files.
enum class ProblemTag {
  kMaxConv,
  kUpperBound,
  kLowerBound,
  kSuperAdditivity,
  kKnapsack01,
  kUnboundedKnapsack,
  kMcsp,
  kTreeSparsity,
  kNecklace,
  kThreeSumConv,
};

inline constexpr std::array<ProblemTag, 10> kAllProblems{
    ProblemTag::kMaxConv,           ProblemTag::kUpperBound,
    ProblemTag::kLowerBound,        ProblemTag::kSuperAdditivity,
    ProblemTag::kKnapsack01,        ProblemTag::kUnboundedKnapsack,
    ProblemTag::kMcsp,              ProblemTag::kTreeSparsity,
    ProblemTag::kNecklace,          ProblemTag::kThreeSumConv,
};

/// File tag: maxconv, upperbound, lowerbound, superadd, knapsack01,
/// uknapsack, mcsp, treesparsity, necklace, 3sumconv.
std::string_view to_string(ProblemTag tag);

/// Inverse of to_string; throws InvalidInput on an unknown tag.
ProblemTag parse_problem_tag(std::string_view tag);

}  // namespace mpconv
