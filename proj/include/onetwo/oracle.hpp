#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "onetwo/bicoloring.hpp"
#include "onetwo/cost_value.hpp"
#include "onetwo/tree.hpp"

namespace onetwo {

// Largest tree the exhaustive routines accept.
inline constexpr std::size_t kOracleMaxVertices = 24;
inline constexpr std::size_t kDefaultSetCap = 1'000'000;

// True iff `s` satisfies `mode`: every vertex outside s (interval) or every
// vertex (total) has between a and b neighbors in s. Duplicates in s are
// ignored. Throws std::out_of_range for an id outside 1..n.
bool validate_set(const RootedTree& tree, std::span<const Vertex> s, const Mode& mode);

// Plain domination: every vertex is in s or adjacent to it.
bool is_dominating(const RootedTree& tree, std::span<const Vertex> s);

struct OracleResult {
  CostValue min_size = kInfinity;
  Count count = 0;
  // All minimum sets (each sorted) in increasing bitmask order, unless more
  // than the cap exist; then `truncated` is set and `sets` holds the first cap.
  std::vector<std::vector<Vertex>> sets;
  bool truncated = false;
};

// Exhaustive minimum: scans subset sizes 0, 1, ... and stops at the first
// size with a valid set, counting every valid set of that size. Throws
// std::invalid_argument above kOracleMaxVertices.
OracleResult oracle_solve(const RootedTree& tree, const Mode& mode, bool materialize = true,
                          std::size_t cap = kDefaultSetCap);

// Every valid set of any size (not just the minimum ones), each sorted, in
// increasing bitmask order.
std::vector<std::vector<Vertex>> oracle_all_sets(const RootedTree& tree, const Mode& mode);

// Domination number by exhaustive search over plain dominating sets.
CostValue oracle_domination_number(const RootedTree& tree);

}  // namespace onetwo
