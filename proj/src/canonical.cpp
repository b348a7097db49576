#include "onetwo/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace onetwo {
namespace {

struct Adjacency {
  std::vector<std::vector<Vertex>> nbrs;  // indexed by vertex
};

Adjacency undirected(const RootedTree& tree) {
  Adjacency adj;
  adj.nbrs.resize(tree.size() + 1);
  for (const auto& [u, v] : tree.edges()) {
    adj.nbrs[u].push_back(v);
    adj.nbrs[v].push_back(u);
  }
  return adj;
}

std::vector<Vertex> centroids(const Adjacency& adj, std::size_t n) {
  // BFS order from vertex 1, then subtree sizes in reverse.
  std::vector<Vertex> order{1};
  std::vector<Vertex> parent(n + 1, kNoVertex);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : adj.nbrs[order[i]]) {
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::size_t> size(n + 1, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != kNoVertex) size[parent[*it]] += size[*it];
  }
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    std::size_t largest = n - size[v];
    for (Vertex w : adj.nbrs[v]) {
      if (w != parent[v]) largest = std::max(largest, size[w]);
    }
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

std::string rooted_code(const Adjacency& adj, std::size_t n, Vertex root,
                        const std::vector<char>* marks) {
  std::vector<Vertex> order{root};
  std::vector<Vertex> parent(n + 1, kNoVertex);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : adj.nbrs[order[i]]) {
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n + 1);
  std::vector<std::string> code(n + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& kids = child_codes[v];
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    if (marks) s += (*marks)[v] ? 'b' : 'w';
    for (auto& k : kids) s += k;
    s += ')';
    kids.clear();
    if (parent[v] != kNoVertex) {
      child_codes[parent[v]].push_back(std::move(s));
    } else {
      code[v] = std::move(s);
    }
  }
  return code[root];
}

CanonicalCode encode(const RootedTree& tree, const std::vector<char>* marks) {
  const auto adj = undirected(tree);
  std::string best;
  for (Vertex c : centroids(adj, tree.size())) {
    auto s = rooted_code(adj, tree.size(), c, marks);
    if (best.empty() || s < best) best = std::move(s);
  }
  return CanonicalCode(std::move(best));
}

}  // namespace

CanonicalCode canonical_code(const RootedTree& tree) { return encode(tree, nullptr); }

CanonicalCode canonical_code(const RootedTree& tree, std::span<const Vertex> marked) {
  std::vector<char> marks(tree.size() + 1, 0);
  for (Vertex v : marked) {
    if (v < 1 || v > tree.size()) throw std::out_of_range("marked vertex outside the tree");
    marks[v] = 1;
  }
  return encode(tree, &marks);
}

std::vector<RootedTree> all_free_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<RootedTree> level{RootedTree::from_edges(1, {}, 1)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::map<CanonicalCode, RootedTree> next;
    for (const auto& t : level) {
      auto edges = t.edges();
      for (Vertex v = 1; v < m; ++v) {
        edges.emplace_back(v, static_cast<Vertex>(m));
        auto grown = RootedTree::from_edges(m, edges, 1);
        edges.pop_back();
        next.try_emplace(canonical_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, t] : next) level.push_back(std::move(t));
  }
  return level;
}

}  // namespace onetwo
