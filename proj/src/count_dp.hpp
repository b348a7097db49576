#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "onetwo/bicoloring.hpp"
#include "onetwo/cost_value.hpp"

namespace onetwo::detail {

struct CostCount {
  CostValue cost = kInfinity;
  Count count = 0;
};

inline void absorb(CostCount& acc, CostValue cost, const Count& count) {
  if (cost.is_infinite() || count == 0) return;
  if (cost < acc.cost) {
    acc.cost = cost;
    acc.count = count;
  } else if (cost == acc.cost) {
    acc.count += count;
  }
}

// Children are folded in one at a time; state j holds the cheapest cost of
// putting exactly j of them into A and the number of ways to reach it.
// States above `cap` are dropped. Costs only ever combine additively, so this
// doubles as an independent check of the delta-based selections.
class ExactCountDp {
 public:
  void reset(std::size_t cap) {
    cap_ = cap;
    states_.assign(1, CostCount{CostValue::finite(0), 1});
  }

  void add(CostValue in, const Count& in_count, CostValue out, const Count& out_count) {
    const std::size_t size = std::min(states_.size() + 1, cap_ + 1);
    next_.assign(size, CostCount{});
    for (std::size_t j = 0; j < states_.size(); ++j) {
      const auto& s = states_[j];
      if (s.cost.is_infinite()) continue;
      absorb(next_[j], s.cost + out, s.count * out_count);
      if (j + 1 < size) absorb(next_[j + 1], s.cost + in, s.count * in_count);
    }
    states_.swap(next_);
  }

  CostCount exactly(std::size_t j) const { return j < states_.size() ? states_[j] : CostCount{}; }

  CostCount best_in(std::size_t lo, std::size_t hi) const {
    CostCount acc;
    for (std::size_t j = lo; j <= hi && j < states_.size(); ++j) {
      absorb(acc, states_[j].cost, states_[j].count);
    }
    return acc;
  }

 private:
  std::size_t cap_ = 0;
  std::vector<CostCount> states_;
  std::vector<CostCount> next_;
};

}  // namespace onetwo::detail
