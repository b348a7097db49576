#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>

namespace onetwo {

// A natural number extended with infinity. Infinity is a separate state, not
// a large sentinel, so subtractive rewrites can never silently wrap through it.
class CostValue {
 public:
  constexpr CostValue() = default;

  static constexpr CostValue finite(std::uint64_t k) { return CostValue(k, true); }
  static constexpr CostValue infinity() { return CostValue(0, false); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  // Throws std::domain_error when infinite.
  std::uint64_t value() const;

  friend constexpr CostValue operator+(CostValue x, CostValue y) {
    if (!x.finite_ || !y.finite_) return infinity();
    return finite(x.value_ + y.value_);
  }
  CostValue& operator+=(CostValue other) { return *this = *this + other; }

  friend constexpr bool operator==(CostValue x, CostValue y) {
    return x.finite_ == y.finite_ && (!x.finite_ || x.value_ == y.value_);
  }
  friend constexpr std::strong_ordering operator<=>(CostValue x, CostValue y) {
    if (x.finite_ != y.finite_) return x.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!x.finite_) return std::strong_ordering::equal;
    return x.value_ <=> y.value_;
  }

  // Decimal digits, or "inf".
  std::string to_string() const;

 private:
  constexpr CostValue(std::uint64_t v, bool f) : value_(v), finite_(f) {}

  // Packed into one word; DP tables hold several of these per vertex.
  std::uint64_t value_ : 63 = 0;
  std::uint64_t finite_ : 1 = 1;
};

std::ostream& operator<<(std::ostream& os, CostValue x);

inline constexpr CostValue kInfinity = CostValue::infinity();

CostValue cv_add(CostValue x, CostValue y);

// Least element; throws std::invalid_argument on an empty list.
CostValue cv_min(std::span<const CostValue> xs);
CostValue cv_min(std::initializer_list<CostValue> xs);

// x - y for finite operands only. Any expression that might involve infinity
// has to be evaluated in additive form instead.
std::int64_t cv_difference(CostValue x, CostValue y);

// x + delta, keeping infinity absorbing. The result must stay nonnegative.
CostValue cv_offset(CostValue x, std::int64_t delta);

}  // namespace onetwo
