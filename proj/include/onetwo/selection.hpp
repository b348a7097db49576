#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "onetwo/cost_value.hpp"
#include "onetwo/tree.hpp"

namespace onetwo {

struct DeltaSelection {
  bool feasible = false;
  std::int64_t sum = 0;
  std::vector<std::size_t> chosen;  // indices into the input, ascending
};

// Chooses between lo and hi items (inclusive) minimizing the sum of their
// deltas: the lo smallest unconditionally, then further negative ones while
// fewer than hi are taken. Runs with a max-heap bounded at hi entries and a
// running sum, so the cost is O(m log hi) for m deltas. Equal deltas prefer
// the lower index; zero deltas past lo are left out.
DeltaSelection select_deltas(std::span<const std::int64_t> deltas, std::size_t lo, std::size_t hi);

// Per-vertex helper for the tree DPs: each child is either put into the
// black set A (cost `in`) or left out of it (cost `out`), and |A| must lie
// in [lo, hi]. Children whose `out` is infinite are forced into A, those
// whose `in` is infinite are forced out; the rest compete through
// select_deltas on in - out. Children are added once and the selection can
// then be evaluated for several ranges.
class ChildSelector {
 public:
  void reset();
  void add(Position child, Vertex id, CostValue in, CostValue out);

  std::size_t child_count() const { return count_; }

  // Minimum cost over admissible A, or infinity. When `chosen` is given it
  // receives the positions in the optimal A (forced ones included).
  CostValue solve(std::size_t lo, std::size_t hi, std::vector<Position>* chosen = nullptr);

 private:
  struct Free {
    std::int64_t delta;
    Vertex id;
    Position pos;
  };

  std::size_t count_ = 0;
  bool impossible_ = false;
  std::uint64_t base_ = 0;
  std::vector<Position> forced_in_;
  std::vector<Free> free_;
  std::vector<std::pair<std::int64_t, std::size_t>> heap_;
};

}  // namespace onetwo
