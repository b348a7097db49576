#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "onetwo/canonical.hpp"
#include "onetwo/tree.hpp"

namespace onetwo {

// Construction steps for trees that have a total [1,2]-set. New vertices get
// the next free ids; "at" is the existing vertex they are joined to.
enum class UpsilonRule : std::uint8_t {
  kSeed,             // P2, both vertices black
  kWhiteLeaf,        // rule 1: white leaf on a black vertex
  kBlackLeaf,        // rule 2: black leaf on a black vertex with one black neighbor
  kBlackPair,        // rule 3, two vertices: u - v(black) - w(black), u white with one black neighbor
  kChainOneBlack,    // rule 3, three vertices: u - v(white) - w(black) - x(black), u has one black neighbor
  kChainTwoBlack,    // rule 4: the same chain on a white u with two black neighbors
};

std::string_view to_string(UpsilonRule rule);

struct RuleStep {
  UpsilonRule rule;
  Vertex at;
};

struct ColoredTree {
  RootedTree tree;
  std::vector<Vertex> black;  // a total [1,2]-set of tree, sorted
  std::vector<RuleStep> provenance;
};

// "seed > r1@1 > r3b@3" style trace.
std::string format_provenance(const std::vector<RuleStep>& steps);

ColoredTree upsilon_seed();

// Every successor obtainable by one rule application, in order of attachment
// vertex then rule. Each successor is revalidated; a violation throws
// std::logic_error.
std::vector<ColoredTree> expansions(const ColoredTree& ct);

// Breadth-first closure of the seed under `expansions`, up to max_n vertices.
// Pairs are deduplicated up to isomorphism (tree and set together) and come
// out in nondecreasing vertex count. Single consumer.
class UpsilonGenerator {
 public:
  explicit UpsilonGenerator(std::size_t max_n);

  std::optional<ColoredTree> next();

 private:
  std::size_t max_n_;
  std::map<std::size_t, std::deque<ColoredTree>> buckets_;
  std::set<CanonicalCode> seen_;
};

// Throws std::invalid_argument for max_n < 2.
UpsilonGenerator generate(std::size_t max_n);

}  // namespace onetwo
