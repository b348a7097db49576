#include "onetwo/solver_ab.hpp"

#include <algorithm>
#include <stdexcept>

#include "count_dp.hpp"
#include "onetwo/selection.hpp"

namespace onetwo {
namespace {

struct Ranges {
  std::size_t minus_lo, minus_hi;
  // Covered range; empty (lo > hi) when b = 0.
  std::size_t covered_lo, covered_hi;
  bool covered_empty;
};

Ranges ranges_for(std::uint32_t a, std::uint32_t b) {
  return {a, b, a > 0 ? a - 1u : 0u, b > 0 ? b - 1u : 0u, b == 0};
}

CostValue cheaper_under_black_parent(const EntryAB& e) { return std::min(e.m_plus, e.covered); }

}  // namespace

DpTableAB solve_ab(const RootedTree& tree, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || a > b) throw std::invalid_argument("solve_ab needs 0 <= a <= b");
  const std::size_t n = tree.size();
  DpTableAB table;
  table.a_ = static_cast<std::uint32_t>(std::min<std::int64_t>(a, UINT32_MAX));
  table.b_ = static_cast<std::uint32_t>(std::min<std::int64_t>(b, UINT32_MAX));
  table.root_ = tree.root();
  table.entries_.resize(n);
  table.position_.assign(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) table.position_[v] = tree.position(v);

  const Ranges r = ranges_for(table.a_, table.b_);
  auto& entries = table.entries_;
  ChildSelector selector;
  std::vector<Position> chosen;
  for (Position p = 0; p < n; ++p) {
    EntryAB& e = entries[p];
    selector.reset();
    CostValue plus = CostValue::finite(1);
    for (Position c : tree.child_positions(p)) {
      const EntryAB& ce = entries[c];
      selector.add(c, tree.at(c), ce.m_plus, ce.m_minus);
      plus += cheaper_under_black_parent(ce);
    }
    e.m_plus = plus;
    e.m_minus = selector.solve(r.minus_lo, r.minus_hi, &chosen);
    for (Position c : chosen) entries[c].black_in_parent_minus = true;
    if (r.covered_empty) {
      e.covered = kInfinity;
    } else {
      e.covered = selector.solve(r.covered_lo, r.covered_hi, &chosen);
      for (Position c : chosen) entries[c].black_in_parent_covered = true;
    }
  }
  return table;
}

CostValue gamma_ab(const DpTableAB& table) {
  const EntryAB& e = table[table.root()];
  return std::min(e.m_plus, e.m_minus);
}

std::optional<Bicoloring> extract_set_ab(const RootedTree& tree, const DpTableAB& table) {
  const CostValue gamma = gamma_ab(table);
  if (gamma.is_infinite()) return std::nullopt;
  enum class Kind { kPlus, kMinus, kCovered };
  Bicoloring out{{}, Mode::interval(table.a(), table.b())};
  std::vector<std::pair<Kind, Position>> stack;
  const Position root = tree.root_position();
  stack.emplace_back(table.at_position(root).m_plus == gamma ? Kind::kPlus : Kind::kMinus, root);
  while (!stack.empty()) {
    const auto [kind, p] = stack.back();
    stack.pop_back();
    switch (kind) {
      case Kind::kPlus:
        out.black.push_back(tree.at(p));
        for (Position c : tree.child_positions(p)) {
          const EntryAB& ce = table.at_position(c);
          stack.emplace_back(ce.m_plus <= ce.covered ? Kind::kPlus : Kind::kCovered, c);
        }
        break;
      case Kind::kMinus:
        for (Position c : tree.child_positions(p)) {
          stack.emplace_back(table.at_position(c).black_in_parent_minus ? Kind::kPlus : Kind::kMinus, c);
        }
        break;
      case Kind::kCovered:
        for (Position c : tree.child_positions(p)) {
          stack.emplace_back(table.at_position(c).black_in_parent_covered ? Kind::kPlus : Kind::kMinus,
                             c);
        }
        break;
    }
  }
  std::sort(out.black.begin(), out.black.end());
  return out;
}

Count count_sets_ab(const RootedTree& tree, const DpTableAB& table) {
  const std::size_t n = tree.size();
  const Ranges r = ranges_for(table.a(), table.b());
  std::vector<Count> plus(n), minus(n), under_black(n);
  detail::ExactCountDp dp;
  for (Position p = 0; p < n; ++p) {
    const EntryAB& e = table.at_position(p);
    const auto kids = tree.child_positions(p);
    dp.reset(std::min<std::size_t>(r.minus_hi, kids.size()));
    Count ways_plus = 1;
    for (Position c : kids) {
      const EntryAB& ce = table.at_position(c);
      dp.add(ce.m_plus, plus[c], ce.m_minus, minus[c]);
      ways_plus *= under_black[c];
    }
    plus[p] = ways_plus;
    const auto m = dp.best_in(r.minus_lo, r.minus_hi);
    const auto cov = r.covered_empty ? detail::CostCount{} : dp.best_in(r.covered_lo, r.covered_hi);
    if (m.cost != e.m_minus || cov.cost != e.covered) {
      throw std::logic_error("count pass disagrees with the [a,b] table");
    }
    minus[p] = m.count;
    const CostValue best = cheaper_under_black_parent(e);
    Count ways = 0;
    if (e.m_plus == best) ways += ways_plus;
    if (e.covered == best) ways += cov.count;
    under_black[p] = ways;
  }
  const Position root = tree.root_position();
  const CostValue gamma = gamma_ab(table);
  Count total = 0;
  if (gamma.is_infinite()) return total;
  if (table.at_position(root).m_plus == gamma) total += plus[root];
  if (table.at_position(root).m_minus == gamma) total += minus[root];
  return total;
}

}  // namespace onetwo
