#include "onetwo/upsilon.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "onetwo/canonical.hpp"
#include "onetwo/oracle.hpp"
#include "onetwo/solver_total.hpp"
#include "onetwo/tree.hpp"

namespace onetwo {
namespace {

const Mode kTotal12 = Mode::total(1, 2);

std::vector<ColoredTree> drain(std::size_t max_n) {
  std::vector<ColoredTree> out;
  auto gen = generate(max_n);
  while (auto ct = gen.next()) out.push_back(std::move(*ct));
  return out;
}

std::size_t black_neighbours(const RootedTree& t, const std::vector<Vertex>& black, Vertex v) {
  std::vector<bool> is_black(t.size() + 1, false);
  for (Vertex b : black) is_black[b] = true;
  std::size_t k = 0;
  for (const auto& [x, y] : t.edges()) {
    if (x == v && is_black[y]) ++k;
    if (y == v && is_black[x]) ++k;
  }
  return k;
}

TEST(Upsilon, Seed) {
  const auto s = upsilon_seed();
  EXPECT_EQ(s.tree.size(), 2u);
  EXPECT_EQ(s.black, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(format_provenance(s.provenance), "seed");
}

TEST(Upsilon, SeedExpansions) {
  const auto next = expansions(upsilon_seed());
  // A white leaf or a black leaf at either end.
  ASSERT_EQ(next.size(), 4u);
  for (const auto& ct : next) {
    EXPECT_EQ(ct.tree.size(), 3u);
    EXPECT_TRUE(validate_set(ct.tree, ct.black, kTotal12));
  }
  EXPECT_EQ(format_provenance(next[0].provenance), "seed > r1@1");
}

TEST(Upsilon, SmallSizes) {
  const auto two = drain(2);
  ASSERT_EQ(two.size(), 1u);
  const auto three = drain(3);
  // P2 with both black; P3 with an end and the middle; P3 all black.
  EXPECT_EQ(three.size(), 3u);
  EXPECT_THROW((void)generate(1), std::invalid_argument);
}

TEST(Upsilon, Soundness) {
  for (const auto& ct : drain(9)) {
    ASSERT_TRUE(validate_set(ct.tree, ct.black, kTotal12)) << format_provenance(ct.provenance);
    for (Vertex v = 1; v <= ct.tree.size(); ++v) {
      EXPECT_LE(black_neighbours(ct.tree, ct.black, v), 2u);
    }
  }
}

TEST(Upsilon, ExpansionsNeverOverloadAVertex) {
  std::vector<ColoredTree> frontier{upsilon_seed()};
  for (int depth = 0; depth < 4; ++depth) {
    std::vector<ColoredTree> next;
    for (const auto& ct : frontier) {
      for (auto& child : expansions(ct)) {
        for (Vertex v = 1; v <= child.tree.size(); ++v) {
          ASSERT_LE(black_neighbours(child.tree, child.black, v), 2u);
        }
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
}

TEST(Upsilon, OutputIsDeduplicatedAndOrdered) {
  std::set<CanonicalCode> codes;
  std::size_t last = 0;
  for (const auto& ct : drain(8)) {
    EXPECT_GE(ct.tree.size(), last);
    last = ct.tree.size();
    EXPECT_TRUE(codes.insert(canonical_code(ct.tree, ct.black)).second);
  }
}

TEST(Upsilon, ShortLegSpiderIsNeverBuilt) {
  const auto spider = canonical_code(spider_tree(3, 2));
  for (const auto& ct : drain(7)) EXPECT_NE(canonical_code(ct.tree), spider);
}

TEST(Upsilon, CompleteForSmallTrees) {
  constexpr std::size_t kMaxN = 8;
  std::map<CanonicalCode, std::set<CanonicalCode>> built;
  for (const auto& ct : drain(kMaxN)) {
    built[canonical_code(ct.tree)].insert(canonical_code(ct.tree, ct.black));
  }
  std::map<CanonicalCode, std::set<CanonicalCode>> truth;
  for (std::size_t n = 2; n <= kMaxN; ++n) {
    for (const auto& t : all_free_trees(n)) {
      EXPECT_EQ(is_total_tree(t), built.count(canonical_code(t)) > 0) << to_edge_list(t);
      for (const auto& s : oracle_all_sets(t, kTotal12)) {
        truth[canonical_code(t)].insert(canonical_code(t, s));
      }
    }
  }
  EXPECT_EQ(built, truth);
}

}  // namespace
}  // namespace onetwo
