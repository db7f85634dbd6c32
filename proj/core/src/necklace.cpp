#include "mpconv/necklace.hpp"

#include <algorithm>
#include <limits>

namespace mpconv {
namespace {

void check_beads(const std::vector<Value>& beads, Value length) {
  for (std::size_t i = 0; i < beads.size(); ++i) {
    if (beads[i] < 0 || beads[i] > length) {
      throw InvalidInput("necklace bead outside [0, circle_length]");
    }
    if (i > 0 && beads[i] < beads[i - 1]) {
      throw InvalidInput("necklace beads must be non-decreasing");
    }
  }
}

}  // namespace

void NecklaceInstance::validate() const {
  if (circle_length <= 0) {
    throw InvalidInput("necklace circle length must be positive");
  }
  if (x.size() != y.size()) {
    throw InvalidInput("necklaces must have the same number of beads");
  }
  if (x.empty()) throw InvalidInput("necklaces must have at least one bead");
  check_beads(x, circle_length);
  check_beads(y, circle_length);
}

Value forward_distance(const NecklaceInstance& inst, std::size_t i,
                       std::size_t j) {
  Value d = checked_sub(inst.y[j], inst.x[i]);
  if (j < i) d = checked_add(d, inst.circle_length);
  return d;
}

Value necklace_linf_brute(const NecklaceInstance& inst) {
  inst.validate();
  const std::size_t n = inst.x.size();
  Value best = std::numeric_limits<Value>::max();
  for (std::size_t k = 0; k < n; ++k) {
    Value lo = std::numeric_limits<Value>::max();
    Value hi = std::numeric_limits<Value>::min();
    for (std::size_t i = 0; i < n; ++i) {
      const Value d = forward_distance(inst, i, (i + k) % n);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    best = std::min(best, checked_sub(hi, lo));
  }
  return best;
}

}  // namespace mpconv
