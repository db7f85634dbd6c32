#include "mpconv/sequence.hpp"

#include <algorithm>
#include <sstream>

namespace mpconv {

Value checked_add(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in addition");
  }
  return out;
}

Value checked_sub(Value a, Value b) {
  Value out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in subtraction");
  }
  return out;
}

Value checked_mul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer overflow in multiplication");
  }
  return out;
}

Value max_abs(std::span<const Value> values) {
  Value m = 0;
  for (Value v : values) {
    if (v == std::numeric_limits<Value>::min()) {
      throw OverflowError("INT64_MIN has no representable magnitude");
    }
    m = std::max(m, v < 0 ? -v : v);
  }
  return m;
}

Sequence::Sequence(std::vector<Value> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw InvalidInput("sequence must be non-empty");
  }
  max_abs_ = mpconv::max_abs(values_);
  Value budget;
  if (__builtin_mul_overflow(static_cast<Value>(values_.size()), max_abs_,
                             &budget) ||
      __builtin_mul_overflow(budget, kHeadroomFactor, &budget)) {
    throw OverflowError("sequence magnitude leaves no headroom: n=" +
                        std::to_string(values_.size()) +
                        " W=" + std::to_string(max_abs_));
  }
}

Sequence Sequence::negated() const {
  std::vector<Value> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -values_[i];
  return Sequence(std::move(out));
}

Sequence Sequence::prefix(std::size_t k) const {
  if (k == 0 || k > values_.size()) {
    throw InvalidInput("prefix length out of range");
  }
  return Sequence(std::vector<Value>(values_.begin(), values_.begin() + k));
}

std::string to_string(const Sequence& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ']';
  return os.str();
}

void require_equal_lengths(const Sequence& a, const Sequence& b,
                           const Sequence& c, const char* what) {
  if (a.size() != b.size() || b.size() != c.size()) {
    throw InvalidInput(std::string(what) + ": sequences must have equal length");
  }
}

}  // namespace mpconv
