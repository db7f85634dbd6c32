#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpconv {

using Value = std::int64_t;

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An intermediate sum left the 64-bit range. Never wrapped or saturated.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments was violated (empty input, length
/// mismatch, malformed tree, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

Value checked_add(Value a, Value b);
Value checked_sub(Value a, Value b);
Value checked_mul(Value a, Value b);

/// Largest |v| over the span, 0 when empty. Throws on INT64_MIN.
Value max_abs(std::span<const Value> values);

/// Worst value blow-up factor applied by any construction in the library
/// (the necklace construction with L = 10 grows values by O(L^2)).
inline constexpr Value kHeadroomFactor = 400;

/// A non-empty list of integers: the input of every problem in the
/// (max,+)-convolution family.
///
/// Construction verifies that n * W * kHeadroomFactor fits in a signed 64-bit
/// word, where W is the largest absolute value. Every reduction in the library
/// stays below that bound, so downstream arithmetic can only overflow on
/// adversarial inputs that are rejected here.
class Sequence {
 public:
  explicit Sequence(std::vector<Value> values);
  Sequence(std::initializer_list<Value> values)
      : Sequence(std::vector<Value>(values)) {}

  std::size_t size() const { return values_.size(); }
  Value operator[](std::size_t i) const { return values_[i]; }
  Value max_abs() const { return max_abs_; }

  std::span<const Value> view() const { return values_; }
  const std::vector<Value>& values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  /// Element-wise negation.
  Sequence negated() const;

  /// First k elements, 1 <= k <= size().
  Sequence prefix(std::size_t k) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Value> values_;
  Value max_abs_ = 0;
};

std::string to_string(const Sequence& s);

/// Throws InvalidInput unless all sequences have the same length.
void require_equal_lengths(const Sequence& a, const Sequence& b,
                           const Sequence& c, const char* what);

}  // namespace mpconv
