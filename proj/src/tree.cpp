#include "onetwo/tree.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace onetwo {

std::string_view to_string(TreeErrorKind kind) {
  switch (kind) {
    case TreeErrorKind::kMalformedLine: return "malformed line";
    case TreeErrorKind::kEmptyTree: return "empty tree";
    case TreeErrorKind::kVertexOutOfRange: return "vertex out of range";
    case TreeErrorKind::kSelfLoop: return "self loop";
    case TreeErrorKind::kDuplicateEdge: return "duplicate edge";
    case TreeErrorKind::kEdgeCount: return "edge count is not n-1";
    case TreeErrorKind::kDisconnected: return "disconnected";
    case TreeErrorKind::kRootOutOfRange: return "root out of range";
  }
  return "unknown";
}

TreeError::TreeError(TreeErrorKind kind, const std::string& what, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line) {}

RootedTree RootedTree::from_edges(std::size_t n, std::span<const Edge> edges, Vertex root) {
  if (n == 0) throw TreeError(TreeErrorKind::kEmptyTree, "a tree needs at least one vertex");
  if (n >= std::numeric_limits<Vertex>::max() - 1) {
    throw TreeError(TreeErrorKind::kVertexOutOfRange, "too many vertices");
  }
  if (root < 1 || root > n) {
    throw TreeError(TreeErrorKind::kRootOutOfRange,
                    "root " + std::to_string(root) + " not in 1.." + std::to_string(n));
  }
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw TreeError(TreeErrorKind::kVertexOutOfRange,
                      "edge " + std::to_string(u) + " " + std::to_string(v) + " outside 1.." +
                          std::to_string(n));
    }
    if (u == v) throw TreeError(TreeErrorKind::kSelfLoop, "self loop at " + std::to_string(u));
  }
  {
    std::vector<Edge> sorted(edges.begin(), edges.end());
    for (auto& e : sorted) {
      if (e.first > e.second) std::swap(e.first, e.second);
    }
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw TreeError(TreeErrorKind::kDuplicateEdge, "duplicate edge " +
                                                         std::to_string(dup->first) + " " +
                                                         std::to_string(dup->second));
    }
  }
  if (edges.size() != n - 1) {
    throw TreeError(TreeErrorKind::kEdgeCount, std::to_string(edges.size()) + " edges for " +
                                                   std::to_string(n) + " vertices");
  }

  // Undirected adjacency in CSR form, neighbors ascending.
  std::vector<std::uint32_t> adj_offset(n + 2, 0);
  for (const auto& [u, v] : edges) {
    ++adj_offset[u + 1];
    ++adj_offset[v + 1];
  }
  std::partial_sum(adj_offset.begin(), adj_offset.end(), adj_offset.begin());
  std::vector<Vertex> adj(2 * edges.size());
  {
    std::vector<std::uint32_t> fill(adj_offset.begin(), adj_offset.end() - 1);
    for (const auto& [u, v] : edges) {
      adj[fill[u]++] = v;
      adj[fill[v]++] = u;
    }
  }
  for (std::size_t v = 1; v <= n; ++v) {
    std::sort(adj.begin() + adj_offset[v], adj.begin() + adj_offset[v + 1]);
  }

  RootedTree t;
  t.n_ = n;
  t.root_ = root;
  t.parent_.assign(n + 1, kNoVertex);

  // Orient away from the root.
  std::vector<char> seen(n + 1, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (auto i = adj_offset[v]; i < adj_offset[v + 1]; ++i) {
      const Vertex w = adj[i];
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent_[w] = v;
      queue.push_back(w);
    }
  }
  if (queue.size() != n) {
    throw TreeError(TreeErrorKind::kDisconnected,
                    "only " + std::to_string(queue.size()) + " of " + std::to_string(n) +
                        " vertices reachable from the root");
  }

  t.child_offset_.assign(n + 2, 0);
  for (Vertex v = 1; v <= n; ++v) {
    if (v != root) ++t.child_offset_[t.parent_[v] + 1];
  }
  std::partial_sum(t.child_offset_.begin(), t.child_offset_.end(), t.child_offset_.begin());
  t.child_list_.resize(n - 1);
  {
    std::vector<std::uint32_t> fill(t.child_offset_.begin(), t.child_offset_.end() - 1);
    // Ascending v keeps every child list sorted.
    for (Vertex v = 1; v <= n; ++v) {
      if (v != root) t.child_list_[fill[t.parent_[v]]++] = v;
    }
  }

  t.order_.reserve(n);
  {
    std::vector<std::pair<Vertex, std::uint32_t>> stack;
    stack.emplace_back(root, t.child_offset_[root]);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < t.child_offset_[v + 1]) {
        const Vertex c = t.child_list_[next++];
        stack.emplace_back(c, t.child_offset_[c]);
      } else {
        t.order_.push_back(v);
        stack.pop_back();
      }
    }
  }
  t.position_.assign(n + 1, 0);
  for (Position p = 0; p < n; ++p) t.position_[t.order_[p]] = p;

  t.pos_child_offset_.assign(n + 1, 0);
  t.pos_child_list_.reserve(n - 1);
  for (Position p = 0; p < n; ++p) {
    for (Vertex c : t.children(t.order_[p])) t.pos_child_list_.push_back(t.position_[c]);
    t.pos_child_offset_[p + 1] = static_cast<std::uint32_t>(t.pos_child_list_.size());
  }
  return t;
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(n_ - 1);
  for (Vertex v = 1; v <= n_; ++v) {
    if (v != root_) out.emplace_back(std::min(v, parent_[v]), std::max(v, parent_[v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedTree RootedTree::rerooted(Vertex new_root) const {
  const auto e = edges();
  return from_edges(n_, e, new_root);
}

namespace {

bool is_blank_or_comment(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_integer(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw TreeError(TreeErrorKind::kMalformedLine,
                    "expected an integer, got '" + std::string(token) + "'", line_no);
  }
  return value;
}

}  // namespace

RootedTree parse_tree(std::string_view text, Vertex root) {
  std::int64_t n = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    const auto line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    const auto tokens = split_tokens(line);
    if (n < 0) {
      if (tokens.size() != 1) {
        throw TreeError(TreeErrorKind::kMalformedLine, "expected the vertex count", line_no);
      }
      n = parse_integer(tokens[0], line_no);
      if (n < 1) throw TreeError(TreeErrorKind::kEmptyTree, "vertex count must be >= 1", line_no);
      continue;
    }
    if (tokens.size() != 2) {
      throw TreeError(TreeErrorKind::kMalformedLine, "expected two vertex ids", line_no);
    }
    const auto u = parse_integer(tokens[0], line_no);
    const auto v = parse_integer(tokens[1], line_no);
    if (u < 1 || u > n || v < 1 || v > n) {
      throw TreeError(TreeErrorKind::kVertexOutOfRange,
                      "vertex id outside 1.." + std::to_string(n), line_no);
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw TreeError(TreeErrorKind::kEmptyTree, "missing vertex count");
  return RootedTree::from_edges(static_cast<std::size_t>(n), edges, root);
}

std::string to_edge_list(const RootedTree& tree) {
  std::ostringstream os;
  os << tree.size() << '\n';
  for (const auto& [u, v] : tree.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<Vertex> post_order(const RootedTree& tree) {
  const auto order = tree.post_order();
  return {order.begin(), order.end()};
}

RootedTree random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("random_tree needs n >= 1");
  if (n == 1) return RootedTree::from_edges(1, {}, 1);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(1, static_cast<Vertex>(n));
  std::vector<Vertex> code(n - 2);
  for (auto& x : code) x = pick(rng);

  // Linear-time Prüfer decoding.
  std::vector<std::uint32_t> degree(n + 1, 1);
  for (Vertex x : code) ++degree[x];
  Vertex ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  Vertex leaf = ptr;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex x : code) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, static_cast<Vertex>(n));
  return RootedTree::from_edges(n, edges, 1);
}

RootedTree relabeled(const RootedTree& tree, std::span<const Vertex> new_label) {
  std::vector<Edge> edges;
  edges.reserve(tree.size());
  for (const auto& [u, v] : tree.edges()) edges.emplace_back(new_label[u], new_label[v]);
  return RootedTree::from_edges(tree.size(), edges, new_label[tree.root()]);
}

RootedTree path_tree(std::size_t n, Vertex root) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return RootedTree::from_edges(n, edges, root);
}

RootedTree star_tree(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 2; v <= leaves + 1; ++v) edges.emplace_back(1, v);
  return RootedTree::from_edges(leaves + 1, edges, 1);
}

RootedTree spider_tree(std::size_t k, std::size_t leg) {
  std::vector<Edge> edges;
  Vertex next = 2;
  for (std::size_t b = 0; b < k; ++b) {
    Vertex prev = 1;
    for (std::size_t i = 0; i < leg; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return RootedTree::from_edges(1 + k * leg, edges, 1);
}

}  // namespace onetwo
