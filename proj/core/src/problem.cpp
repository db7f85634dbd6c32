#include "mpconv/problem.hpp"

#include <string>

#include "mpconv/sequence.hpp"

namespace mpconv {

std::string_view to_string(ProblemTag tag) {
  switch (tag) {
    case ProblemTag::kMaxConv: return "maxconv";
    case ProblemTag::kUpperBound: return "upperbound";
    case ProblemTag::kLowerBound: return "lowerbound";
    case ProblemTag::kSuperAdditivity: return "superadd";
    case ProblemTag::kKnapsack01: return "knapsack01";
    case ProblemTag::kUnboundedKnapsack: return "uknapsack";
    case ProblemTag::kMcsp: return "mcsp";
    case ProblemTag::kTreeSparsity: return "treesparsity";
    case ProblemTag::kNecklace: return "necklace";
    case ProblemTag::kThreeSumConv: return "3sumconv";
  }
  return "unknown";
}

ProblemTag parse_problem_tag(std::string_view tag) {
  for (ProblemTag p : kAllProblems) {
    if (to_string(p) == tag) return p;
  }
  throw InvalidInput("unknown problem tag: " + std::string(tag));
}

}  // namespace mpconv
