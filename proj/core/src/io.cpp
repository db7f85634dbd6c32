#include "mpconv/io.hpp"

#include <string>

namespace mpconv {
namespace {

using nlohmann::json;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("instance payload is missing \"") + key + "\"");
  }
  return j.at(key);
}

std::vector<Value> int_array(const json& j, const char* key) {
  const json& arr = field(j, key);
  if (!arr.is_array()) {
    throw InvalidInput(std::string("\"") + key + "\" must be an array");
  }
  std::vector<Value> out;
  out.reserve(arr.size());
  for (const json& v : arr) {
    if (!v.is_number_integer()) {
      throw InvalidInput(std::string("\"") + key + "\" must hold integers");
    }
    out.push_back(v.get<Value>());
  }
  return out;
}

Value int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) {
    throw InvalidInput(std::string("\"") + key + "\" must be an integer");
  }
  return v.get<Value>();
}

Sequence seq(const json& j, const char* key) { return Sequence(int_array(j, key)); }

bool payload_fits(ProblemTag tag, const Payload& p) {
  switch (tag) {
    case ProblemTag::kMaxConv:
      return std::holds_alternative<SequencePair>(p);
    case ProblemTag::kUpperBound:
    case ProblemTag::kLowerBound:
    case ProblemTag::kThreeSumConv:
      return std::holds_alternative<SequenceTriple>(p);
    case ProblemTag::kSuperAdditivity:
    case ProblemTag::kMcsp:
      return std::holds_alternative<Sequence>(p);
    case ProblemTag::kKnapsack01:
    case ProblemTag::kUnboundedKnapsack:
      return std::holds_alternative<KnapsackInstance>(p);
    case ProblemTag::kTreeSparsity:
      return std::holds_alternative<TreeSparsityInstance>(p);
    case ProblemTag::kNecklace:
      return std::holds_alternative<NecklaceInstance>(p);
  }
  return false;
}

Payload payload_from_json(ProblemTag tag, const json& j) {
  switch (tag) {
    case ProblemTag::kMaxConv:
      return SequencePair{seq(j, "a"), seq(j, "b")};
    case ProblemTag::kUpperBound:
    case ProblemTag::kLowerBound:
    case ProblemTag::kThreeSumConv:
      return SequenceTriple{seq(j, "a"), seq(j, "b"), seq(j, "c")};
    case ProblemTag::kSuperAdditivity:
    case ProblemTag::kMcsp:
      return seq(j, "a");
    case ProblemTag::kKnapsack01:
    case ProblemTag::kUnboundedKnapsack: {
      KnapsackInstance inst;
      inst.capacity = int_field(j, "capacity");
      inst.mode = tag == ProblemTag::kKnapsack01 ? KnapsackMode::kZeroOne
                                                 : KnapsackMode::kUnbounded;
      const json& items = field(j, "items");
      if (!items.is_array()) throw InvalidInput("\"items\" must be an array");
      for (const json& it : items) {
        if (!it.is_array() || it.size() != 2 || !it[0].is_number_integer() ||
            !it[1].is_number_integer()) {
          throw InvalidInput("each item must be [weight, value]");
        }
        inst.items.push_back({it[0].get<Value>(), it[1].get<Value>()});
      }
      inst.validate();
      return inst;
    }
    case ProblemTag::kTreeSparsity: {
      TreeSparsityInstance inst{WeightedTree(int_array(j, "parents"),
                                             int_array(j, "weights")),
                                std::nullopt};
      if (j.contains("k")) {
        const Value k = int_field(j, "k");
        if (k < 0 || static_cast<std::size_t>(k) > inst.tree.size()) {
          throw InvalidInput("\"k\" must lie in [0, n]");
        }
        inst.k = static_cast<std::size_t>(k);
      }
      return inst;
    }
    case ProblemTag::kNecklace: {
      NecklaceInstance inst{int_array(j, "x"), int_array(j, "y"),
                            int_field(j, "circle_length")};
      inst.validate();
      return inst;
    }
  }
  throw InvalidInput("unsupported problem tag");
}

}  // namespace

void InstanceFile::validate() const {
  if (!payload_fits(problem, payload)) {
    throw InvalidInput("payload does not match problem tag " +
                       std::string(to_string(problem)));
  }
  if (const auto* t = std::get_if<SequenceTriple>(&payload)) {
    require_equal_lengths(t->a, t->b, t->c, to_string(problem).data());
  }
}

json payload_to_json(const Payload& payload) {
  return std::visit(
      Overloaded{
          [](const Sequence& s) { return json{{"a", s.values()}}; },
          [](const SequencePair& p) {
            return json{{"a", p.first.values()}, {"b", p.second.values()}};
          },
          [](const SequenceTriple& t) {
            return json{{"a", t.a.values()},
                        {"b", t.b.values()},
                        {"c", t.c.values()}};
          },
          [](const KnapsackInstance& k) {
            json items = json::array();
            for (const Item& it : k.items) items.push_back({it.weight, it.value});
            return json{{"capacity", k.capacity}, {"items", std::move(items)}};
          },
          [](const TreeSparsityInstance& t) {
            json out{{"parents", t.tree.parents()},
                     {"weights", t.tree.weights()}};
            if (t.k) out["k"] = *t.k;
            return out;
          },
          [](const NecklaceInstance& n) {
            return json{{"x", n.x}, {"y", n.y}, {"circle_length", n.circle_length}};
          },
      },
      payload);
}

json to_json(const InstanceFile& file) {
  file.validate();
  return {{"problem", to_string(file.problem)},
          {"payload", payload_to_json(file.payload)},
          {"metadata", file.metadata}};
}

InstanceFile instance_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("instance file must be a JSON object");
  const json& tag = field(j, "problem");
  if (!tag.is_string()) throw InvalidInput("\"problem\" must be a string");
  const ProblemTag problem = parse_problem_tag(tag.get<std::string>());
  InstanceFile file{problem, payload_from_json(problem, field(j, "payload")),
                    j.value("metadata", json::object())};
  file.validate();
  return file;
}

std::string serialize(const InstanceFile& file) { return to_json(file).dump(); }

InstanceFile parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

json to_json(const Interpretation& rule) {
  json out{{"kind", to_string(rule.kind)}};
  switch (rule.kind) {
    case InterpretKind::kImmediate:
      out["verdict"] = rule.immediate_verdict;
      break;
    case InterpretKind::kEqualsThreshold:
    case InterpretKind::kBelowThresholdRefutes:
      out["threshold"] = rule.threshold;
      break;
    case InterpretKind::kReadWindow:
      out["offset"] = rule.threshold;
      out["count"] = rule.count;
      break;
    case InterpretKind::kBoundedByNegation:
      out["bounds"] = rule.bounds;
      break;
    case InterpretKind::kSameValue:
    case InterpretKind::kSameDecision:
    case InterpretKind::kAnyYesRefutes:
      break;
  }
  return out;
}

}  // namespace mpconv
