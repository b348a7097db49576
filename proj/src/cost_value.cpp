#include "onetwo/cost_value.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace onetwo {

std::uint64_t CostValue::value() const {
  if (!finite_) throw std::domain_error("value() of an infinite cost");
  return value_;
}

std::string CostValue::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, CostValue x) { return os << x.to_string(); }

CostValue cv_add(CostValue x, CostValue y) { return x + y; }

CostValue cv_min(std::span<const CostValue> xs) {
  if (xs.empty()) throw std::invalid_argument("cv_min of an empty list");
  return *std::min_element(xs.begin(), xs.end());
}

CostValue cv_min(std::initializer_list<CostValue> xs) {
  return cv_min(std::span<const CostValue>(xs.begin(), xs.size()));
}

std::int64_t cv_difference(CostValue x, CostValue y) {
  if (x.is_infinite() || y.is_infinite()) {
    throw std::domain_error("cv_difference with an infinite operand");
  }
  return static_cast<std::int64_t>(x.value()) - static_cast<std::int64_t>(y.value());
}

CostValue cv_offset(CostValue x, std::int64_t delta) {
  if (x.is_infinite()) return x;
  const auto v = static_cast<std::int64_t>(x.value()) + delta;
  if (v < 0) throw std::domain_error("cv_offset produced a negative cost");
  return CostValue::finite(static_cast<std::uint64_t>(v));
}

}  // namespace onetwo
