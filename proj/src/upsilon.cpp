#include "onetwo/upsilon.hpp"

#include <algorithm>
#include <stdexcept>

#include "onetwo/oracle.hpp"

namespace onetwo {

std::string_view to_string(UpsilonRule rule) {
  switch (rule) {
    case UpsilonRule::kSeed: return "seed";
    case UpsilonRule::kWhiteLeaf: return "r1";
    case UpsilonRule::kBlackLeaf: return "r2";
    case UpsilonRule::kBlackPair: return "r3a";
    case UpsilonRule::kChainOneBlack: return "r3b";
    case UpsilonRule::kChainTwoBlack: return "r4";
  }
  return "?";
}

std::string format_provenance(const std::vector<RuleStep>& steps) {
  std::string out;
  for (const auto& step : steps) {
    if (!out.empty()) out += " > ";
    out += to_string(step.rule);
    if (step.rule != UpsilonRule::kSeed) out += "@" + std::to_string(step.at);
  }
  return out;
}

ColoredTree upsilon_seed() {
  const Edge e{1, 2};
  return {RootedTree::from_edges(2, std::span<const Edge>(&e, 1), 1), {1, 2}, {{UpsilonRule::kSeed, 0}}};
}

namespace {

// Attaches a path of new vertices to `at`; colors[i] says whether the i-th
// new vertex (counted from `at`) is black.
ColoredTree attach_path(const ColoredTree& ct, Vertex at, std::initializer_list<bool> colors,
                        UpsilonRule rule) {
  auto edges = ct.tree.edges();
  auto black = ct.black;
  Vertex prev = at;
  auto next = static_cast<Vertex>(ct.tree.size() + 1);
  for (bool is_black : colors) {
    edges.emplace_back(prev, next);
    if (is_black) black.push_back(next);
    prev = next++;
  }
  ColoredTree out{RootedTree::from_edges(next - 1, edges, ct.tree.root()), std::move(black),
                  ct.provenance};
  std::sort(out.black.begin(), out.black.end());
  out.provenance.push_back({rule, at});
  if (!validate_set(out.tree, out.black, Mode::total(1, 2))) {
    throw std::logic_error("rule " + std::string(to_string(rule)) + " broke the total [1,2] condition");
  }
  return out;
}

}  // namespace

std::vector<ColoredTree> expansions(const ColoredTree& ct) {
  const std::size_t n = ct.tree.size();
  std::vector<char> in(n + 1, 0);
  for (Vertex v : ct.black) in[v] = 1;
  std::vector<int> black_nbrs(n + 1, 0);
  for (const auto& [u, v] : ct.tree.edges()) {
    black_nbrs[u] += in[v];
    black_nbrs[v] += in[u];
  }
  std::vector<ColoredTree> out;
  for (Vertex v = 1; v <= n; ++v) {
    if (in[v]) {
      out.push_back(attach_path(ct, v, {false}, UpsilonRule::kWhiteLeaf));
      if (black_nbrs[v] == 1) out.push_back(attach_path(ct, v, {true}, UpsilonRule::kBlackLeaf));
    } else if (black_nbrs[v] == 1) {
      out.push_back(attach_path(ct, v, {true, true}, UpsilonRule::kBlackPair));
      out.push_back(attach_path(ct, v, {false, true, true}, UpsilonRule::kChainOneBlack));
    } else if (black_nbrs[v] == 2) {
      out.push_back(attach_path(ct, v, {false, true, true}, UpsilonRule::kChainTwoBlack));
    }
  }
  return out;
}

UpsilonGenerator::UpsilonGenerator(std::size_t max_n) : max_n_(max_n) {
  if (max_n < 2) throw std::invalid_argument("generate needs max_n >= 2");
  auto seed = upsilon_seed();
  seen_.insert(canonical_code(seed.tree, seed.black));
  buckets_[seed.tree.size()].push_back(std::move(seed));
}

std::optional<ColoredTree> UpsilonGenerator::next() {
  while (!buckets_.empty() && buckets_.begin()->second.empty()) buckets_.erase(buckets_.begin());
  if (buckets_.empty()) return std::nullopt;
  auto& bucket = buckets_.begin()->second;
  ColoredTree item = std::move(bucket.front());
  bucket.pop_front();
  // Rules add at most three vertices, so every pair of this size was queued
  // before the first one is handed out.
  if (item.tree.size() < max_n_) {
    for (auto& child : expansions(item)) {
      if (child.tree.size() > max_n_) continue;
      if (seen_.insert(canonical_code(child.tree, child.black)).second) {
        buckets_[child.tree.size()].push_back(std::move(child));
      }
    }
  }
  return item;
}

UpsilonGenerator generate(std::size_t max_n) { return UpsilonGenerator(max_n); }

}  // namespace onetwo
