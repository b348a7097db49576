#include "onetwo/selection.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace onetwo {
namespace {

// Exhaustive minimum over every subset with lo..hi members.
std::optional<std::int64_t> brute_force(const std::vector<std::int64_t>& d, std::size_t lo,
                                        std::size_t hi) {
  std::optional<std::int64_t> best;
  for (std::uint32_t mask = 0; mask < (1u << d.size()); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k < lo || k > hi) continue;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (mask >> i & 1) sum += d[i];
    }
    if (!best || sum < *best) best = sum;
  }
  return best;
}

// Sort, take the lo smallest, then continue while negative and below hi.
DeltaSelection sort_and_scan(const std::vector<std::int64_t>& d, std::size_t lo, std::size_t hi) {
  DeltaSelection r;
  if (lo > hi || lo > d.size()) return r;
  std::vector<std::size_t> idx(d.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](auto x, auto y) { return d[x] < d[y]; });
  r.feasible = true;
  for (std::size_t i = 0; i < idx.size() && i < hi; ++i) {
    if (i >= lo && d[idx[i]] >= 0) break;
    r.sum += d[idx[i]];
    r.chosen.push_back(idx[i]);
  }
  std::sort(r.chosen.begin(), r.chosen.end());
  return r;
}

TEST(SelectDeltas, Examples) {
  const std::vector<std::int64_t> d{3, -1, 0, -4, 2};
  auto r = select_deltas(d, 0, 5);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.sum, -5);
  EXPECT_EQ(r.chosen, (std::vector<std::size_t>{1, 3}));

  r = select_deltas(d, 3, 3);
  EXPECT_EQ(r.sum, -5);
  EXPECT_EQ(r.chosen, (std::vector<std::size_t>{1, 2, 3}));

  r = select_deltas(d, 0, 1);
  EXPECT_EQ(r.chosen, (std::vector<std::size_t>{3}));

  EXPECT_FALSE(select_deltas(d, 6, 7).feasible);
  EXPECT_FALSE(select_deltas(d, 2, 1).feasible);
  EXPECT_TRUE(select_deltas({}, 0, 0).feasible);
  EXPECT_FALSE(select_deltas({}, 1, 2).feasible);
}

TEST(SelectDeltas, TiesPreferLowerIndex) {
  const std::vector<std::int64_t> d{-2, -2, -2, 5};
  EXPECT_EQ(select_deltas(d, 0, 2).chosen, (std::vector<std::size_t>{0, 1}));
  const std::vector<std::int64_t> z{0, 0, 0};
  EXPECT_EQ(select_deltas(z, 1, 3).chosen, (std::vector<std::size_t>{0}));
}

TEST(SelectDeltasProperty, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t m = rng() % 9;
    std::vector<std::int64_t> d(m);
    for (auto& x : d) x = static_cast<std::int64_t>(rng() % 11) - 5;
    const std::size_t lo = rng() % 5, hi = lo + rng() % 5;
    const auto got = select_deltas(d, lo, hi);
    const auto want = brute_force(d, lo, hi);
    ASSERT_EQ(got.feasible, want.has_value());
    if (!want) continue;
    EXPECT_EQ(got.sum, *want);
    EXPECT_GE(got.chosen.size(), lo);
    EXPECT_LE(got.chosen.size(), hi);
    std::int64_t sum = 0;
    for (auto i : got.chosen) sum += d[i];
    EXPECT_EQ(sum, got.sum);
  }
}

TEST(SelectDeltasProperty, MatchesSortAndScan) {
  std::mt19937_64 rng(22);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t m = rng() % 60;
    std::vector<std::int64_t> d(m);
    for (auto& x : d) x = static_cast<std::int64_t>(rng() % 21) - 10;
    const std::size_t lo = rng() % 10, hi = lo + rng() % 40;
    const auto got = select_deltas(d, lo, hi);
    const auto want = sort_and_scan(d, lo, hi);
    ASSERT_EQ(got.feasible, want.feasible);
    EXPECT_EQ(got.sum, want.sum);
    EXPECT_EQ(got.chosen, want.chosen);
  }
}

struct Child {
  CostValue in, out;
};

CostValue brute_force_children(const std::vector<Child>& cs, std::size_t lo, std::size_t hi) {
  CostValue best = kInfinity;
  for (std::uint32_t mask = 0; mask < (1u << cs.size()); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k < lo || k > hi) continue;
    CostValue sum = CostValue::finite(0);
    for (std::size_t i = 0; i < cs.size(); ++i) sum += (mask >> i & 1) ? cs[i].in : cs[i].out;
    best = std::min(best, sum);
  }
  return best;
}

TEST(ChildSelector, ForcedChildren) {
  ChildSelector sel;
  sel.reset();
  sel.add(0, 1, CostValue::finite(2), kInfinity);  // forced in
  sel.add(1, 2, kInfinity, CostValue::finite(1));  // forced out
  sel.add(2, 3, CostValue::finite(1), CostValue::finite(3));
  std::vector<Position> chosen;
  EXPECT_EQ(sel.solve(1, 1, &chosen), CostValue::finite(6));
  EXPECT_EQ(chosen, (std::vector<Position>{0}));
  EXPECT_EQ(sel.solve(0, 2, &chosen), CostValue::finite(4));
  std::sort(chosen.begin(), chosen.end());
  EXPECT_EQ(chosen, (std::vector<Position>{0, 2}));
  EXPECT_EQ(sel.solve(0, 0), kInfinity);
  EXPECT_EQ(sel.solve(3, 3), kInfinity);
}

TEST(ChildSelector, DeadChildMakesEverythingInfinite) {
  ChildSelector sel;
  sel.reset();
  sel.add(0, 1, kInfinity, kInfinity);
  sel.add(1, 2, CostValue::finite(1), CostValue::finite(1));
  EXPECT_EQ(sel.solve(0, 5), kInfinity);
}

TEST(ChildSelectorProperty, MatchesBruteForce) {
  std::mt19937_64 rng(23);
  ChildSelector sel;
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t m = rng() % 8;
    std::vector<Child> cs(m);
    sel.reset();
    for (std::size_t i = 0; i < m; ++i) {
      auto pick = [&] { return rng() % 6 == 0 ? kInfinity : CostValue::finite(rng() % 6); };
      cs[i] = {pick(), pick()};
      sel.add(static_cast<Position>(i), static_cast<Vertex>(i + 1), cs[i].in, cs[i].out);
    }
    for (int q = 0; q < 4; ++q) {
      const std::size_t lo = rng() % 4, hi = lo + rng() % 4;
      std::vector<Position> chosen;
      const auto got = sel.solve(lo, hi, &chosen);
      ASSERT_EQ(got, brute_force_children(cs, lo, hi)) << "lo=" << lo << " hi=" << hi;
      if (got.is_infinite()) continue;
      CostValue sum = CostValue::finite(0);
      std::vector<bool> in(m, false);
      for (auto p : chosen) in[p] = true;
      for (std::size_t i = 0; i < m; ++i) sum += in[i] ? cs[i].in : cs[i].out;
      EXPECT_EQ(sum, got);
      EXPECT_GE(chosen.size(), lo);
      EXPECT_LE(chosen.size(), hi);
    }
  }
}

}  // namespace
}  // namespace onetwo
