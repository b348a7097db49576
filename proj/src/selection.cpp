#include "onetwo/selection.hpp"

#include <algorithm>

namespace onetwo {
namespace {

// Bounded max-heap over (delta, tie key). Keeps the `cap` smallest entries
// and the sum of what it holds.
class BoundedMaxHeap {
 public:
  using Entry = std::pair<std::int64_t, std::size_t>;

  BoundedMaxHeap(std::vector<Entry>& storage, std::size_t cap) : heap_(storage), cap_(cap) {
    heap_.clear();
  }

  void offer(Entry e) {
    if (cap_ == 0) return;
    if (heap_.size() < cap_) {
      heap_.push_back(e);
      std::push_heap(heap_.begin(), heap_.end());
      sum_ += e.first;
    } else if (e < heap_.front()) {
      sum_ -= heap_.front().first;
      std::pop_heap(heap_.begin(), heap_.end());
      heap_.back() = e;
      std::push_heap(heap_.begin(), heap_.end());
      sum_ += e.first;
    }
  }

  // Drops non-negative maxima while more than `keep` entries remain.
  void trim_nonnegative(std::size_t keep) {
    while (heap_.size() > keep && heap_.front().first >= 0) {
      sum_ -= heap_.front().first;
      std::pop_heap(heap_.begin(), heap_.end());
      heap_.pop_back();
    }
  }

  std::int64_t sum() const { return sum_; }
  const std::vector<Entry>& entries() const { return heap_; }

 private:
  std::vector<Entry>& heap_;
  std::size_t cap_;
  std::int64_t sum_ = 0;
};

}  // namespace

DeltaSelection select_deltas(std::span<const std::int64_t> deltas, std::size_t lo, std::size_t hi) {
  DeltaSelection out;
  if (lo > hi || lo > deltas.size()) return out;
  std::vector<BoundedMaxHeap::Entry> storage;
  BoundedMaxHeap heap(storage, std::min(hi, deltas.size()));
  for (std::size_t i = 0; i < deltas.size(); ++i) heap.offer({deltas[i], i});
  heap.trim_nonnegative(lo);
  out.feasible = true;
  out.sum = heap.sum();
  for (const auto& e : heap.entries()) out.chosen.push_back(e.second);
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

void ChildSelector::reset() {
  count_ = 0;
  impossible_ = false;
  base_ = 0;
  forced_in_.clear();
  free_.clear();
}

void ChildSelector::add(Position child, Vertex id, CostValue in, CostValue out) {
  ++count_;
  if (in.is_infinite() && out.is_infinite()) {
    impossible_ = true;
  } else if (out.is_infinite()) {
    forced_in_.push_back(child);
    base_ += in.value();
  } else if (in.is_infinite()) {
    base_ += out.value();
  } else {
    base_ += out.value();
    free_.push_back({cv_difference(in, out), id, child});
  }
}

CostValue ChildSelector::solve(std::size_t lo, std::size_t hi, std::vector<Position>* chosen) {
  if (chosen) chosen->clear();
  if (impossible_ || lo > hi || forced_in_.size() > hi) return kInfinity;
  const std::size_t forced = forced_in_.size();
  const std::size_t need = lo > forced ? lo - forced : 0;
  const std::size_t room = hi - forced;
  if (need > free_.size()) return kInfinity;

  // Tie key is the vertex id so that equal deltas favour smaller ids.
  BoundedMaxHeap heap(heap_, std::min(room, free_.size()));
  for (std::size_t i = 0; i < free_.size(); ++i) {
    heap.offer({free_[i].delta, (static_cast<std::size_t>(free_[i].id) << 32) | i});
  }
  heap.trim_nonnegative(need);
  if (chosen) {
    chosen->assign(forced_in_.begin(), forced_in_.end());
    for (const auto& e : heap.entries()) chosen->push_back(free_[e.second & 0xffffffffu].pos);
  }
  return cv_offset(CostValue::finite(base_), heap.sum());
}

}  // namespace onetwo
