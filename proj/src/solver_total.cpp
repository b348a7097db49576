#include "onetwo/solver_total.hpp"

#include <algorithm>
#include <stdexcept>

#include "count_dp.hpp"
#include "onetwo/selection.hpp"

namespace onetwo {
namespace {

struct Bounds {
  std::size_t lo, hi;
};

std::array<Bounds, kChildRangeCount> bounds_for(std::uint32_t a, std::uint32_t b) {
  // a >= 1, so a-1 and b-1 never underflow.
  return {{{a, b}, {a - 1u, b - 1u}, {a, b - 1u}, {a - 1u, b}}};
}

// Range a child's black-children count must respect, given its parent's color.
constexpr std::size_t child_range(bool parent_black) {
  return static_cast<std::size_t>(parent_black ? ChildRange::kCovered : ChildRange::kUncovered);
}

constexpr std::uint8_t chosen_bit(bool parent_black, std::size_t parent_range) {
  return static_cast<std::uint8_t>(1u << (2 * (parent_black ? 1 : 0) + parent_range));
}

}  // namespace

DpTableTotal solve_total(const RootedTree& tree, std::int64_t a, std::int64_t b) {
  if (a < 1 || a > b) throw std::invalid_argument("solve_total needs 1 <= a <= b");
  const std::size_t n = tree.size();
  DpTableTotal table;
  table.a_ = static_cast<std::uint32_t>(std::min<std::int64_t>(a, UINT32_MAX));
  table.b_ = static_cast<std::uint32_t>(std::min<std::int64_t>(b, UINT32_MAX));
  table.root_ = tree.root();
  table.entries_.resize(n);
  table.position_.assign(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) table.position_[v] = tree.position(v);

  const auto bounds = bounds_for(table.a_, table.b_);
  auto& entries = table.entries_;
  ChildSelector under_white, under_black;
  std::vector<Position> chosen;
  for (Position p = 0; p < n; ++p) {
    EntryTotal& e = entries[p];
    under_white.reset();
    under_black.reset();
    for (Position c : tree.child_positions(p)) {
      const EntryTotal& ce = entries[c];
      const Vertex id = tree.at(c);
      under_white.add(c, id, ce.plus[child_range(false)], ce.minus[child_range(false)]);
      under_black.add(c, id, ce.plus[child_range(true)], ce.minus[child_range(true)]);
    }
    for (std::size_t r = 0; r < kChildRangeCount; ++r) {
      const bool record = r <= static_cast<std::size_t>(ChildRange::kCovered);
      e.minus[r] = under_white.solve(bounds[r].lo, bounds[r].hi, record ? &chosen : nullptr);
      if (record) {
        for (Position c : chosen) entries[c].chosen |= chosen_bit(false, r);
      }
      e.plus[r] = CostValue::finite(1) +
                  under_black.solve(bounds[r].lo, bounds[r].hi, record ? &chosen : nullptr);
      if (record) {
        for (Position c : chosen) entries[c].chosen |= chosen_bit(true, r);
      }
    }
  }
  return table;
}

CostValue gamma_total(const DpTableTotal& table) {
  const EntryTotal& e = table[table.root()];
  return std::min(e.plus_at(ChildRange::kUncovered), e.minus_at(ChildRange::kUncovered));
}

bool is_total_tree(const RootedTree& tree) {
  return gamma_total(solve_total(tree, 1, 2)).is_finite();
}

std::optional<Bicoloring> extract_total_set(const RootedTree& tree, const DpTableTotal& table) {
  const CostValue gamma = gamma_total(table);
  if (gamma.is_infinite()) return std::nullopt;
  struct Task {
    bool black;
    std::size_t range;
    Position pos;
  };
  Bicoloring out{{}, Mode::total(table.a(), table.b())};
  const Position root = tree.root_position();
  const std::size_t top = static_cast<std::size_t>(ChildRange::kUncovered);
  std::vector<Task> stack{{table.at_position(root).plus[top] == gamma, top, root}};
  while (!stack.empty()) {
    const Task t = stack.back();
    stack.pop_back();
    if (t.black) out.black.push_back(tree.at(t.pos));
    const std::uint8_t bit = chosen_bit(t.black, t.range);
    for (Position c : tree.child_positions(t.pos)) {
      stack.push_back({(table.at_position(c).chosen & bit) != 0, child_range(t.black), c});
    }
  }
  std::sort(out.black.begin(), out.black.end());
  return out;
}

Count count_total_sets(const RootedTree& tree, const DpTableTotal& table) {
  const std::size_t n = tree.size();
  const auto bounds = bounds_for(table.a(), table.b());
  // ways[p][sign][range] for the two ranges that parents actually ask for.
  std::vector<std::array<std::array<Count, 2>, 2>> ways(n);
  detail::ExactCountDp dp;
  for (Position p = 0; p < n; ++p) {
    const EntryTotal& e = table.at_position(p);
    const auto kids = tree.child_positions(p);
    for (int black = 0; black < 2; ++black) {
      const std::size_t cr = child_range(black != 0);
      dp.reset(std::min<std::size_t>(table.b(), kids.size()));
      for (Position c : kids) {
        const EntryTotal& ce = table.at_position(c);
        dp.add(ce.plus[cr], ways[c][1][cr], ce.minus[cr], ways[c][0][cr]);
      }
      for (std::size_t r = 0; r < 2; ++r) {
        const auto best = dp.best_in(bounds[r].lo, bounds[r].hi);
        const CostValue expected = black ? cv_offset(e.plus[r], -1) : e.minus[r];
        if (best.cost != expected) throw std::logic_error("count pass disagrees with the total table");
        ways[p][black][r] = best.count;
      }
    }
  }
  const CostValue gamma = gamma_total(table);
  Count total = 0;
  if (gamma.is_infinite()) return total;
  const Position root = tree.root_position();
  const EntryTotal& e = table.at_position(root);
  if (e.plus[0] == gamma) total += ways[root][1][0];
  if (e.minus[0] == gamma) total += ways[root][0][0];
  return total;
}

}  // namespace onetwo
