#include "onetwo/solver_onetwo.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "count_dp.hpp"

namespace onetwo {
namespace {

constexpr Position kNoPosition = std::numeric_limits<Position>::max();

struct Candidate {
  std::int64_t delta;
  Vertex id;
  Position pos;
  bool operator<(const Candidate& o) const {
    return delta != o.delta ? delta < o.delta : id < o.id;
  }
};

// Sum of m- over a child list, split into its finite part and the number of
// infinite terms, so that sums with a few children left out can be formed
// without ever subtracting infinity.
struct MinusSum {
  std::uint64_t finite = 0;
  std::size_t infinite = 0;

  void add(CostValue x) {
    if (x.is_finite()) {
      finite += x.value();
    } else {
      ++infinite;
    }
  }
  void remove(CostValue x) {
    if (x.is_finite()) {
      finite -= x.value();
    } else {
      --infinite;
    }
  }
  CostValue value() const { return infinite ? kInfinity : CostValue::finite(finite); }
};

MinusSum minus_sum(const DpTable12& table, std::span<const Position> kids) {
  MinusSum s;
  for (Position c : kids) s.add(table.at_position(c).m_minus);
  return s;
}

CostValue c1_at(const DpTable12& table, std::span<const Position> kids, Position w) {
  auto s = minus_sum(table, kids);
  s.remove(table.at_position(w).m_minus);
  return s.value() + table.at_position(w).m_plus;
}

CostValue c2_at(const DpTable12& table, std::span<const Position> kids, Position u, Position w) {
  auto s = minus_sum(table, kids);
  s.remove(table.at_position(u).m_minus);
  s.remove(table.at_position(w).m_minus);
  return s.value() + table.at_position(u).m_plus + table.at_position(w).m_plus;
}

std::array<Vertex, 2> ordered(Vertex x, Vertex y) {
  return x < y ? std::array<Vertex, 2>{x, y} : std::array<Vertex, 2>{y, x};
}

}  // namespace

DpTable12 solve12(const RootedTree& tree) {
  const std::size_t n = tree.size();
  DpTable12 table;
  table.root_ = tree.root();
  table.position_.assign(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) table.position_[v] = tree.position(v);

  // Entries are appended in post-order, so children are always present and
  // the table is written in a single pass.
  auto& entries = table.entries_;
  entries.reserve(n);
  for (Position p = 0; p < n; ++p) {
    Entry12& e = entries.emplace_back();
    const auto kids = tree.child_positions(p);
    if (kids.empty()) {
      e.m_plus = CostValue::finite(1);
      e.m_minus = kInfinity;
      e.c3 = CostValue::finite(0);
      e.min_c1 = kInfinity;
      e.min_c2 = kInfinity;
      e.c4 = CostValue::finite(0);
      e.c4_choice = kC4NoBlackChild;
      continue;
    }

    // Children with m- = inf must be black; the others compete on
    // m+ - m- (two smallest kept, ties to the smaller id).
    std::uint64_t minus_finite = 0;
    CostValue c4_sum = CostValue::finite(0);
    std::size_t forced = 0;
    std::array<Position, 2> forced_pos{kNoPosition, kNoPosition};
    std::size_t free = 0;
    Candidate d1{}, d2{};
    for (Position c : kids) {
      const Entry12& ce = entries[c];
      c4_sum += ce.c4;
      if (ce.m_minus.is_infinite()) {
        if (forced < 2) forced_pos[forced] = c;
        ++forced;
        continue;
      }
      minus_finite += ce.m_minus.value();
      const Candidate cand{cv_difference(ce.m_plus, ce.m_minus), tree.at(c), c};
      if (free == 0 || cand < d1) {
        d2 = d1;
        d1 = cand;
      } else if (free == 1 || cand < d2) {
        d2 = cand;
      }
      ++free;
    }

    const CostValue rest = CostValue::finite(minus_finite);
    e.c3 = forced ? kInfinity : rest;
    e.m_plus = CostValue::finite(1) + c4_sum;

    e.best1 = kNoVertex;
    e.min_c1 = kInfinity;
    if (forced == 0) {
      e.best1 = d1.id;
      e.min_c1 = cv_offset(rest, d1.delta);
    } else if (forced == 1) {
      e.best1 = tree.at(forced_pos[0]);
      e.min_c1 = rest + entries[forced_pos[0]].m_plus;
    }

    e.best2 = {kNoVertex, kNoVertex};
    e.min_c2 = kInfinity;
    if (forced == 0 && free >= 2) {
      // d1, d2 are the two smallest (delta, id): also the lexicographically
      // smallest optimal pair.
      e.best2 = ordered(d1.id, d2.id);
      e.min_c2 = cv_offset(rest, d1.delta + d2.delta);
    } else if (forced == 1 && free >= 1) {
      e.best2 = ordered(tree.at(forced_pos[0]), d1.id);
      e.min_c2 = cv_offset(rest + entries[forced_pos[0]].m_plus, d1.delta);
    } else if (forced == 2) {
      e.best2 = ordered(tree.at(forced_pos[0]), tree.at(forced_pos[1]));
      e.min_c2 = rest + entries[forced_pos[0]].m_plus + entries[forced_pos[1]].m_plus;
    }

    e.m_minus = std::min(e.min_c1, e.min_c2);
    e.c4 = std::min({e.m_plus, e.c3, e.min_c1});
    e.c4_choice = 0;
    if (e.m_plus == e.c4) e.c4_choice |= kC4Black;
    if (e.c3 == e.c4) e.c4_choice |= kC4NoBlackChild;
    if (e.min_c1 == e.c4) e.c4_choice |= kC4OneBlackChild;
  }
  return table;
}

CostValue gamma12(const DpTable12& table) {
  const Entry12& r = table[table.root()];
  return std::min(r.m_plus, r.m_minus);
}

Bicoloring extract_set(const RootedTree& tree, const DpTable12& table) {
  enum class Kind { kPlus, kMinus, kC4 };
  Bicoloring out{{}, Mode::interval(1, 2)};
  std::vector<std::pair<Kind, Position>> stack;
  const Entry12& r = table.at_position(tree.root_position());
  stack.emplace_back(r.m_plus <= r.m_minus ? Kind::kPlus : Kind::kMinus, tree.root_position());

  auto push_with_black = [&](Position p, Vertex a, Vertex b) {
    for (Position c : tree.child_positions(p)) {
      const Vertex id = tree.at(c);
      stack.emplace_back(id == a || id == b ? Kind::kPlus : Kind::kMinus, c);
    }
  };

  while (!stack.empty()) {
    const auto [kind, p] = stack.back();
    stack.pop_back();
    const Entry12& e = table.at_position(p);
    switch (kind) {
      case Kind::kPlus:
        out.black.push_back(tree.at(p));
        for (Position c : tree.child_positions(p)) stack.emplace_back(Kind::kC4, c);
        break;
      case Kind::kMinus:
        if (e.min_c1 <= e.min_c2) {
          push_with_black(p, e.best1, kNoVertex);
        } else {
          push_with_black(p, e.best2[0], e.best2[1]);
        }
        break;
      case Kind::kC4:
        if (e.c4_choice & kC4Black) {
          stack.emplace_back(Kind::kPlus, p);
        } else if (e.c4_choice & kC4NoBlackChild) {
          push_with_black(p, kNoVertex, kNoVertex);
        } else {
          push_with_black(p, e.best1, kNoVertex);
        }
        break;
    }
  }
  std::sort(out.black.begin(), out.black.end());
  return out;
}

namespace {

struct PositionCounts {
  std::vector<Count> plus, minus;
};

PositionCounts count_positions(const RootedTree& tree, const DpTable12& table) {
  const std::size_t n = tree.size();
  PositionCounts out;
  out.plus.assign(n, 0);
  out.minus.assign(n, 0);
  std::vector<Count> with_black_parent(n, 0);  // ways to reach c4
  detail::ExactCountDp dp;
  for (Position p = 0; p < n; ++p) {
    const Entry12& e = table.at_position(p);
    dp.reset(2);
    Count plus = 1;
    for (Position c : tree.child_positions(p)) {
      dp.add(table.at_position(c).m_plus, out.plus[c], table.at_position(c).m_minus, out.minus[c]);
      plus *= with_black_parent[c];
    }
    const auto none = dp.exactly(0);
    const auto one = dp.exactly(1);
    const auto two = dp.exactly(2);
    if (none.cost != e.c3 || one.cost != e.min_c1 || two.cost != e.min_c2) {
      throw std::logic_error("count pass disagrees with the [1,2] table");
    }
    out.plus[p] = plus;
    Count minus = 0;
    if (e.m_minus.is_finite()) {
      if (one.cost == e.m_minus) minus += one.count;
      if (two.cost == e.m_minus) minus += two.count;
    }
    out.minus[p] = minus;
    Count ways = 0;
    if (e.c4_choice & kC4Black) ways += plus;
    if (e.c4_choice & kC4NoBlackChild) ways += none.count;
    if (e.c4_choice & kC4OneBlackChild) ways += one.count;
    with_black_parent[p] = ways;
  }
  return out;
}

}  // namespace

CountTable12 count_table(const RootedTree& tree, const DpTable12& table) {
  auto counts = count_positions(tree, table);
  CountTable12 out;
  out.nu_plus.assign(tree.size() + 1, 0);
  out.nu_minus.assign(tree.size() + 1, 0);
  for (Position p = 0; p < tree.size(); ++p) {
    out.nu_plus[tree.at(p)] = std::move(counts.plus[p]);
    out.nu_minus[tree.at(p)] = std::move(counts.minus[p]);
  }
  return out;
}

Count count_sets(const RootedTree& tree, const DpTable12& table) {
  const auto counts = count_positions(tree, table);
  const Position r = tree.root_position();
  const Entry12& e = table.at_position(r);
  const CostValue gamma = std::min(e.m_plus, e.m_minus);
  Count total = 0;
  if (e.m_plus == gamma) total += counts.plus[r];
  if (e.m_minus == gamma) total += counts.minus[r];
  return total;
}

SetEnumerator12::SetEnumerator12(const RootedTree& tree, const DpTable12& table)
    : tree_(&tree), table_(&table) {
  pending_.push_back({Kind::kRoot, tree.root_position()});
}

std::vector<std::array<Position, 2>> SetEnumerator12::minus_options(Position p) const {
  std::vector<std::array<Position, 2>> out;
  const Entry12& e = table_->at_position(p);
  if (e.m_minus.is_infinite()) return out;
  const auto kids = tree_->child_positions(p);
  for (Position w : kids) {
    if (c1_at(*table_, kids, w) == e.m_minus) out.push_back({w, kNoPosition});
  }
  if (e.min_c2 == e.m_minus) {
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (c2_at(*table_, kids, kids[i], kids[j]) == e.m_minus) out.push_back({kids[i], kids[j]});
      }
    }
  }
  return out;
}

std::vector<Position> SetEnumerator12::one_black_child_options(Position p) const {
  std::vector<Position> out;
  const Entry12& e = table_->at_position(p);
  if (!(e.c4_choice & kC4OneBlackChild)) return out;
  const auto kids = tree_->child_positions(p);
  for (Position u : kids) {
    if (c1_at(*table_, kids, u) == e.c4) out.push_back(u);
  }
  return out;
}

std::size_t SetEnumerator12::option_count(const Task& task) const {
  const Entry12& e = table_->at_position(task.pos);
  switch (task.kind) {
    case Kind::kRoot: {
      const CostValue gamma = std::min(e.m_plus, e.m_minus);
      return (e.m_plus == gamma ? 1 : 0) + (e.m_minus == gamma ? 1 : 0);
    }
    case Kind::kPlus:
      return 1;
    case Kind::kMinus:
      return minus_options(task.pos).size();
    case Kind::kC4:
      return ((e.c4_choice & kC4Black) ? 1 : 0) + ((e.c4_choice & kC4NoBlackChild) ? 1 : 0) +
             one_black_child_options(task.pos).size();
  }
  return 0;
}

void SetEnumerator12::apply(const Task& task, std::size_t option) {
  const Position p = task.pos;
  const Entry12& e = table_->at_position(p);
  const auto kids = tree_->child_positions(p);
  // Children are pushed in reverse so they are expanded in ascending id order.
  auto push_children = [&](Position a, Position b) {
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
      pending_.push_back({*it == a || *it == b ? Kind::kPlus : Kind::kMinus, *it});
    }
  };
  switch (task.kind) {
    case Kind::kRoot: {
      const CostValue gamma = std::min(e.m_plus, e.m_minus);
      const bool plus_first = e.m_plus == gamma;
      const bool take_plus = plus_first && option == 0;
      pending_.push_back({take_plus ? Kind::kPlus : Kind::kMinus, p});
      break;
    }
    case Kind::kPlus:
      black_.push_back(tree_->at(p));
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) pending_.push_back({Kind::kC4, *it});
      break;
    case Kind::kMinus: {
      const auto opt = minus_options(p).at(option);
      push_children(opt[0], opt[1]);
      break;
    }
    case Kind::kC4: {
      std::size_t index = option;
      if (e.c4_choice & kC4Black) {
        if (index == 0) {
          pending_.push_back({Kind::kPlus, p});
          break;
        }
        --index;
      }
      if (e.c4_choice & kC4NoBlackChild) {
        if (index == 0) {
          push_children(kNoPosition, kNoPosition);
          break;
        }
        --index;
      }
      push_children(one_black_child_options(p).at(index), kNoPosition);
      break;
    }
  }
}

void SetEnumerator12::descend() {
  while (!pending_.empty()) {
    const Task task = pending_.back();
    pending_.pop_back();
    const std::size_t count = option_count(task);
    if (count == 0) throw std::logic_error("enumeration reached a task without options");
    if (count > 1) frames_.push_back({task, 0, count, pending_, black_.size()});
    apply(task, 0);
  }
}

std::optional<Bicoloring> SetEnumerator12::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else {
    while (!frames_.empty() && frames_.back().option + 1 == frames_.back().option_count) {
      frames_.pop_back();
    }
    if (frames_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    Frame& f = frames_.back();
    ++f.option;
    pending_ = f.pending;
    black_.resize(f.black_size);
    apply(f.task, f.option);
  }
  descend();
  Bicoloring out{black_, Mode::interval(1, 2)};
  std::sort(out.black.begin(), out.black.end());
  return out;
}

SetEnumerator12 enumerate_sets(const RootedTree& tree, const DpTable12& table) {
  return SetEnumerator12(tree, table);
}

CostValue c1_additive(const RootedTree& tree, const DpTable12& table, Vertex v, Vertex w) {
  CostValue sum = table[w].m_plus;
  for (Vertex t : tree.children(v)) {
    if (t != w) sum += table[t].m_minus;
  }
  return sum;
}

CostValue c1_rewritten(const DpTable12& table, Vertex v, Vertex w) {
  return cv_offset(table[v].c3, cv_difference(table[w].m_plus, table[w].m_minus));
}

CostValue c2_additive(const RootedTree& tree, const DpTable12& table, Vertex v, Vertex u, Vertex w) {
  CostValue sum = table[u].m_plus + table[w].m_plus;
  for (Vertex t : tree.children(v)) {
    if (t != u && t != w) sum += table[t].m_minus;
  }
  return sum;
}

CostValue c2_rewritten(const DpTable12& table, Vertex v, Vertex u, Vertex w) {
  return cv_offset(table[v].c3, cv_difference(table[u].m_plus, table[u].m_minus) +
                                    cv_difference(table[w].m_plus, table[w].m_minus));
}

}  // namespace onetwo
