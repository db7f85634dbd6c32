#pragma once

// JSON instance files. The schema is documented in docs/format.md.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "mpconv/knapsack.hpp"
#include "mpconv/necklace.hpp"
#include "mpconv/problem.hpp"
#include "mpconv/reductions.hpp"
#include "mpconv/sequence.hpp"
#include "mpconv/tree.hpp"

namespace mpconv {

struct TreeSparsityInstance {
  WeightedTree tree;
  std::optional<std::size_t> k;
  friend bool operator==(const TreeSparsityInstance&,
                         const TreeSparsityInstance&) = default;
};

/// maxconv: SequencePair; upperbound, lowerbound, 3sumconv: SequenceTriple;
/// superadd, mcsp: Sequence; knapsack01, uknapsack: KnapsackInstance.
using Payload = std::variant<Sequence, SequencePair, SequenceTriple,
                             KnapsackInstance, TreeSparsityInstance,
                             NecklaceInstance>;

struct InstanceFile {
  ProblemTag problem;
  Payload payload;
  nlohmann::json metadata = nlohmann::json::object();

  /// Throws InvalidInput when the payload type does not fit the tag.
  void validate() const;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

nlohmann::json to_json(const InstanceFile& file);
InstanceFile instance_from_json(const nlohmann::json& j);

/// Compact, key-sorted serialization; equal instances give equal bytes.
std::string serialize(const InstanceFile& file);

/// Throws InvalidInput on malformed JSON or a payload that violates the schema.
InstanceFile parse_instance(std::string_view text);

nlohmann::json payload_to_json(const Payload& payload);

nlohmann::json to_json(const Interpretation& rule);

/// {"source", "target", "instances", "interpret", "blowup_note",
///  "peak_magnitude"}.
template <class Instance>
nlohmann::json to_json(const ReductionOutcome<Instance>& outcome) {
  nlohmann::json instances = nlohmann::json::array();
  for (const Instance& inst : outcome.instances) {
    instances.push_back(payload_to_json(Payload(inst)));
  }
  return {{"source", to_string(outcome.source)},
          {"target", to_string(outcome.target)},
          {"instances", std::move(instances)},
          {"interpret", to_json(outcome.interpret)},
          {"blowup_note", outcome.blowup_note},
          {"peak_magnitude", outcome.peak_magnitude}};
}

}  // namespace mpconv
