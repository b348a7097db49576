#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "onetwo/tree.hpp"

namespace onetwo {

// Identifies a free (unrooted) tree up to isomorphism, optionally together
// with a marked vertex subset.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string code) : code_(std::move(code)) {}

  const std::string& str() const { return code_; }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string code_;
};

// Centroid-rooted AHU encoding. The rooting of `tree` is ignored. With two
// centroids the lexicographically smaller encoding wins.
CanonicalCode canonical_code(const RootedTree& tree);

// As above, but each vertex is tagged with its membership in `marked`, so
// two (tree, set) pairs compare equal iff some isomorphism maps one set onto
// the other.
CanonicalCode canonical_code(const RootedTree& tree, std::span<const Vertex> marked);

// One representative (rooted at 1) per isomorphism class of free trees on n
// vertices, sorted by canonical code. Intended for n up to about 14.
std::vector<RootedTree> all_free_trees(std::size_t n);

}  // namespace onetwo
