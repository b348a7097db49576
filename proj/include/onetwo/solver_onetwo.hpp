#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "onetwo/bicoloring.hpp"
#include "onetwo/cost_value.hpp"
#include "onetwo/tree.hpp"

namespace onetwo {

// Which colorings of a child w reach c4(w) when w's parent is black.
enum C4Branch : std::uint8_t {
  kC4Black = 1,          // w black: m+[w]
  kC4NoBlackChild = 2,   // w white, all children white: c3(w)
  kC4OneBlackChild = 4,  // w white, exactly one black child: min c1(w, .)
};

// Per-vertex DP values for minimum [1,2]-sets of the subtree T_v.
struct Entry12 {
  CostValue m_plus;   // smallest set of T_v containing v
  CostValue m_minus;  // smallest set of T_v avoiding v
  CostValue c3;       // sum of m- over the children
  CostValue c4;       // cheapest T_v given a black parent
  CostValue min_c1;   // best case with exactly one black child
  CostValue min_c2;   // best case with exactly two black children
  Vertex best1 = kNoVertex;       // smallest-id child attaining min_c1
  std::array<Vertex, 2> best2{};  // lexicographically smallest pair attaining min_c2
  std::uint8_t c4_choice = 0;     // C4Branch bits, every branch tied at c4
};

class DpTable12 {
 public:
  DpTable12() = default;

  std::size_t size() const { return entries_.size(); }
  Vertex root() const { return root_; }

  const Entry12& operator[](Vertex v) const { return entries_[position_[v]]; }
  const Entry12& at_position(Position p) const { return entries_[p]; }

 private:
  friend DpTable12 solve12(const RootedTree& tree);

  Vertex root_ = kNoVertex;
  std::vector<Entry12> entries_;  // by post-order position
  std::vector<Position> position_;
};

// One bottom-up pass, O(n).
DpTable12 solve12(const RootedTree& tree);

// min(m+[root], m-[root]); always finite.
CostValue gamma12(const DpTable12& table);

// A minimum [1,2]-set by back-substitution over the recorded choices, O(n).
// Ties: the black branch of c4 before c3 before the single-child branch; in
// the white case one black child (smallest id) before a pair (lexicographic);
// at the root, containing the root first.
Bicoloring extract_set(const RootedTree& tree, const DpTable12& table);

// Number of minimum sets of each subtree with v in / out (nu+ / nu-).
struct CountTable12 {
  std::vector<Count> nu_plus;   // by vertex id, [0] unused
  std::vector<Count> nu_minus;
};
CountTable12 count_table(const RootedTree& tree, const DpTable12& table);

// Exact number of minimum [1,2]-sets of the whole tree.
Count count_sets(const RootedTree& tree, const DpTable12& table);

// Produces every minimum [1,2]-set exactly once, first one equal to
// extract_set, in a fixed order. Keeps references to `tree` and `table`,
// which must outlive it. Single consumer; movable.
class SetEnumerator12 {
 public:
  SetEnumerator12(const RootedTree& tree, const DpTable12& table);

  std::optional<Bicoloring> next();

 private:
  enum class Kind : std::uint8_t { kRoot, kPlus, kMinus, kC4 };
  struct Task {
    Kind kind;
    Position pos;
  };
  struct Frame {
    Task task;
    std::size_t option;
    std::size_t option_count;
    std::vector<Task> pending;
    std::size_t black_size;
  };

  std::size_t option_count(const Task& task) const;
  void apply(const Task& task, std::size_t option);
  void descend();

  // Option lists for a white vertex: single children then pairs, by id.
  std::vector<std::array<Position, 2>> minus_options(Position p) const;
  std::vector<Position> one_black_child_options(Position p) const;

  const RootedTree* tree_;
  const DpTable12* table_;
  bool started_ = false;
  bool done_ = false;
  std::vector<Task> pending_;
  std::vector<Vertex> black_;
  std::vector<Frame> frames_;
};

SetEnumerator12 enumerate_sets(const RootedTree& tree, const DpTable12& table);

// c1(v, w) and c2(v, u, w) evaluated term by term from the children's m
// values, and through the c3-based rewrites. The rewrites need finite m-[w]
// (and m-[u]); they throw std::domain_error otherwise.
CostValue c1_additive(const RootedTree& tree, const DpTable12& table, Vertex v, Vertex w);
CostValue c1_rewritten(const DpTable12& table, Vertex v, Vertex w);
CostValue c2_additive(const RootedTree& tree, const DpTable12& table, Vertex v, Vertex u, Vertex w);
CostValue c2_rewritten(const DpTable12& table, Vertex v, Vertex u, Vertex w);

}  // namespace onetwo
