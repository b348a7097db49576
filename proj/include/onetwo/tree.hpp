#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace onetwo {

// Vertex ids are 1-based, as in the edge-list format. 0 means "no vertex".
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0;

// Index of a vertex in the post-order sequence, 0-based. The root is last.
using Position = std::uint32_t;

using Edge = std::pair<Vertex, Vertex>;

enum class TreeErrorKind {
  kMalformedLine,
  kEmptyTree,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kEdgeCount,
  kDisconnected,
  kRootOutOfRange,
};

std::string_view to_string(TreeErrorKind kind);

class TreeError : public std::runtime_error {
 public:
  TreeError(TreeErrorKind kind, const std::string& what, std::size_t line = 0);

  TreeErrorKind kind() const { return kind_; }
  // 1-based input line, or 0 when the error is not tied to a line.
  std::size_t line() const { return line_; }

 private:
  TreeErrorKind kind_;
  std::size_t line_;
};

// Immutable rooted tree. Children are kept in ascending id order and the
// post-order visits them in that order, so everything downstream is
// deterministic.
//
// Besides the id-based accessors the tree carries a copy of its child lists
// re-expressed in post-order positions. The solvers run on positions only:
// a subtree occupies a contiguous block ending at its root, which keeps the
// bottom-up passes cache friendly on large inputs.
class RootedTree {
 public:
  // Validates the edge set (ids in range, no loops or duplicates, exactly
  // n-1 edges, connected). Throws TreeError.
  static RootedTree from_edges(std::size_t n, std::span<const Edge> edges, Vertex root = 1);

  std::size_t size() const { return n_; }
  Vertex root() const { return root_; }

  // kNoVertex for the root.
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_offset_[v], child_list_.data() + child_offset_[v + 1]};
  }
  bool is_leaf(Vertex v) const { return child_offset_[v] == child_offset_[v + 1]; }
  std::size_t degree(Vertex v) const { return children(v).size() + (v == root_ ? 0 : 1); }

  std::span<const Vertex> post_order() const { return order_; }
  Position position(Vertex v) const { return position_[v]; }
  Vertex at(Position p) const { return order_[p]; }
  Position root_position() const { return static_cast<Position>(n_ - 1); }

  // Positions of the children of the vertex at position p, in ascending id order.
  std::span<const Position> child_positions(Position p) const {
    return {pos_child_list_.data() + pos_child_offset_[p],
            pos_child_list_.data() + pos_child_offset_[p + 1]};
  }

  // Undirected edges as (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;

  RootedTree rerooted(Vertex new_root) const;

 private:
  RootedTree() = default;

  std::size_t n_ = 0;
  Vertex root_ = kNoVertex;
  std::vector<Vertex> parent_;             // indexed by vertex, [0] unused
  std::vector<std::uint32_t> child_offset_;  // size n + 2
  std::vector<Vertex> child_list_;
  std::vector<Vertex> order_;              // post-order
  std::vector<Position> position_;         // indexed by vertex
  std::vector<std::uint32_t> pos_child_offset_;  // size n + 1
  std::vector<Position> pos_child_list_;
};

// Edge-list document: first non-comment line is n, then n-1 lines "u v".
// Lines starting with '#' and blank lines are ignored.
RootedTree parse_tree(std::string_view text, Vertex root = 1);

// Renders the tree in the edge-list format accepted by parse_tree.
std::string to_edge_list(const RootedTree& tree);

std::vector<Vertex> post_order(const RootedTree& tree);

// Uniform random labeled tree decoded from a Prüfer sequence drawn from a
// generator seeded with `seed`. Rooted at vertex 1. Throws std::invalid_argument for n = 0.
RootedTree random_tree(std::size_t n, std::uint64_t seed);

// Relabels every vertex v as new_label[v]; new_label must be a permutation of
// 1..n stored at indices 1..n. The root follows its label.
RootedTree relabeled(const RootedTree& tree, std::span<const Vertex> new_label);

// Helpers for small fixtures.
RootedTree path_tree(std::size_t n, Vertex root = 1);
RootedTree star_tree(std::size_t leaves);  // center 1, rooted at the center

// Root 1 with k branches, each a path of `leg` vertices hanging off the root.
// leg = 3 gives the 3k+1 vertex family whose minimum [1,2]-sets are exponential.
RootedTree spider_tree(std::size_t k, std::size_t leg = 3);

}  // namespace onetwo
