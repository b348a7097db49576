#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "onetwo/bicoloring.hpp"
#include "onetwo/cost_value.hpp"
#include "onetwo/tree.hpp"

namespace onetwo {

struct EntryAB {
  CostValue m_plus;   // smallest [a,b]-set of T_v containing v
  CostValue m_minus;  // smallest [a,b]-set of T_v avoiding v
  // v white below a black parent: v needs max(a-1,0)..b-1 black children.
  CostValue covered;
  // Child selection records: whether v is black in its parent's optimal
  // choice when the parent is white (minus case) or white below a black
  // grandparent (covered case).
  bool black_in_parent_minus = false;
  bool black_in_parent_covered = false;
};

class DpTableAB {
 public:
  DpTableAB() = default;

  std::uint32_t a() const { return a_; }
  std::uint32_t b() const { return b_; }
  Vertex root() const { return root_; }
  std::size_t size() const { return entries_.size(); }

  const EntryAB& operator[](Vertex v) const { return entries_[position_[v]]; }
  const EntryAB& at_position(Position p) const { return entries_[p]; }

 private:
  friend DpTableAB solve_ab(const RootedTree& tree, std::int64_t a, std::int64_t b);

  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
  Vertex root_ = kNoVertex;
  std::vector<EntryAB> entries_;
  std::vector<Position> position_;
};

// O(n log b). Throws std::invalid_argument unless 0 <= a <= b.
DpTableAB solve_ab(const RootedTree& tree, std::int64_t a, std::int64_t b);

// Root minimum. Infinite when the tree has no [a,b]-set.
CostValue gamma_ab(const DpTableAB& table);

// A minimum [a,b]-set, or nullopt when none exists. Ties prefer v black over
// white and, among children, fewer black ones with smaller ids.
std::optional<Bicoloring> extract_set_ab(const RootedTree& tree, const DpTableAB& table);

// Exact number of minimum [a,b]-sets (0 when none exist). Polynomial in n
// and b; meant for moderate trees.
Count count_sets_ab(const RootedTree& tree, const DpTableAB& table);

}  // namespace onetwo
