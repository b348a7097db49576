#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "onetwo/bicoloring.hpp"
#include "onetwo/cost_value.hpp"
#include "onetwo/tree.hpp"

namespace onetwo {

// Admissible number of black children of v. A vertex not covered by its
// parent (white parent, or the root) needs a..b of them; one covered by a
// black parent needs a-1..b-1. The two mixed ranges are kept as well so the
// table also holds the "at most b-1 black children" values.
enum class ChildRange : std::uint8_t {
  kUncovered = 0,  // [a, b]
  kCovered = 1,    // [a-1, b-1]
  kTight = 2,      // [a, b-1]
  kLoose = 3,      // [a-1, b]
};
inline constexpr std::size_t kChildRangeCount = 4;

struct EntryTotal {
  // Smallest total [a,b]-set of T_v with v black (plus) or white (minus),
  // every vertex of T_v below v satisfied, and v's black children count in
  // the given range. Infinite when no such set exists.
  std::array<CostValue, kChildRangeCount> plus{};
  std::array<CostValue, kChildRangeCount> minus{};
  // Bit (2 * parent_black + parent_range) set when v is black in its
  // parent's optimal child selection; parent_range is kUncovered or kCovered.
  std::uint8_t chosen = 0;

  CostValue plus_at(ChildRange r) const { return plus[static_cast<std::size_t>(r)]; }
  CostValue minus_at(ChildRange r) const { return minus[static_cast<std::size_t>(r)]; }

  // Cheapest T_v below a black parent with v white / v black.
  CostValue d1() const { return minus_at(ChildRange::kCovered); }
  CostValue d2() const { return plus_at(ChildRange::kCovered); }
};

class DpTableTotal {
 public:
  DpTableTotal() = default;

  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }
  Vertex root() const { return root_; }
  std::size_t size() const { return entries_.size(); }

  const EntryTotal& operator[](Vertex v) const { return entries_[position_[v]]; }
  const EntryTotal& at_position(Position p) const { return entries_[p]; }

 private:
  friend DpTableTotal solve_total(const RootedTree& tree, std::int64_t a, std::int64_t b);

  std::uint32_t a_ = 1;
  std::uint32_t b_ = 2;
  Vertex root_ = kNoVertex;
  std::vector<EntryTotal> entries_;
  std::vector<Position> position_;
};

// Throws std::invalid_argument unless 1 <= a <= b.
DpTableTotal solve_total(const RootedTree& tree, std::int64_t a, std::int64_t b);

// Size of a smallest total [a,b]-set; infinite when there is none.
CostValue gamma_total(const DpTableTotal& table);

// True iff the tree has a total [1,2]-set.
bool is_total_tree(const RootedTree& tree);

// A minimum total [a,b]-set, or nullopt when none exists.
std::optional<Bicoloring> extract_total_set(const RootedTree& tree, const DpTableTotal& table);

// Exact number of minimum total [a,b]-sets; 0 when none exist.
Count count_total_sets(const RootedTree& tree, const DpTableTotal& table);

}  // namespace onetwo
