#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "onetwo/tree.hpp"

namespace onetwo {

// Exact number of sets. Minimum-set families grow exponentially with n.
using Count = boost::multiprecision::cpp_int;

enum class ModeKind {
  kInterval,  // every vertex outside S has a..b neighbors in S
  kTotal,     // every vertex has a..b neighbors in S
};

struct Mode {
  ModeKind kind = ModeKind::kInterval;
  std::uint32_t a = 1;
  std::uint32_t b = 2;

  // Both throw std::invalid_argument when a > b.
  static Mode interval(std::uint32_t a, std::uint32_t b);
  static Mode total(std::uint32_t a, std::uint32_t b);

  friend bool operator==(const Mode&, const Mode&) = default;
};

// "interval[1,2]" / "total[2,3]".
std::string to_string(const Mode& mode);

// A candidate set S (the black vertices), sorted ascending, with the
// condition it is meant to satisfy.
struct Bicoloring {
  std::vector<Vertex> black;
  Mode mode;

  std::size_t size() const { return black.size(); }
};

// "1,4,7"; empty string for the empty set.
std::string format_set(const std::vector<Vertex>& set);

// Parses "1,4,7" (whitespace tolerated, empty string = empty set).
// Throws std::invalid_argument.
std::vector<Vertex> parse_set(const std::string& text);

}  // namespace onetwo
