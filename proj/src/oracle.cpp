#include "onetwo/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace onetwo {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> neighbor_masks(const RootedTree& tree) {
  std::vector<Mask> nbr(tree.size() + 1, 0);
  for (const auto& [u, v] : tree.edges()) {
    nbr[u] |= Mask{1} << (v - 1);
    nbr[v] |= Mask{1} << (u - 1);
  }
  return nbr;
}

bool valid_mask(const std::vector<Mask>& nbr, std::size_t n, Mask s, const Mode& mode) {
  for (std::size_t v = 1; v <= n; ++v) {
    if (mode.kind == ModeKind::kInterval && (s >> (v - 1) & 1)) continue;
    const auto k = static_cast<std::uint32_t>(std::popcount(nbr[v] & s));
    if (k < mode.a || k > mode.b) return false;
  }
  return true;
}

std::vector<Vertex> to_vertices(Mask s) {
  std::vector<Vertex> out;
  while (s) {
    out.push_back(static_cast<Vertex>(std::countr_zero(s) + 1));
    s &= s - 1;
  }
  return out;
}

void check_size(const RootedTree& tree) {
  if (tree.size() > kOracleMaxVertices) {
    throw std::invalid_argument("oracle limited to " + std::to_string(kOracleMaxVertices) +
                                " vertices");
  }
}

// Next mask with the same popcount (Gosper's hack). Returns 0 past the last one.
Mask next_combination(Mask x, std::size_t n) {
  const Mask c = x & (~x + 1);
  const Mask r = x + c;
  if (r == 0) return 0;
  const Mask next = (((r ^ x) >> 2) / c) | r;
  return n < 32 && (next >> n) ? 0 : next;
}

}  // namespace

bool validate_set(const RootedTree& tree, std::span<const Vertex> s, const Mode& mode) {
  const std::size_t n = tree.size();
  std::vector<char> in(n + 1, 0);
  for (Vertex v : s) {
    if (v < 1 || v > n) throw std::out_of_range("vertex " + std::to_string(v) + " not in the tree");
    in[v] = 1;
  }
  std::vector<std::uint32_t> black_nbrs(n + 1, 0);
  for (const auto& [u, v] : tree.edges()) {
    black_nbrs[u] += in[v];
    black_nbrs[v] += in[u];
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (mode.kind == ModeKind::kInterval && in[v]) continue;
    if (black_nbrs[v] < mode.a || black_nbrs[v] > mode.b) return false;
  }
  return true;
}

bool is_dominating(const RootedTree& tree, std::span<const Vertex> s) {
  const std::size_t n = tree.size();
  std::vector<char> covered(n + 1, 0);
  std::vector<char> in(n + 1, 0);
  for (Vertex v : s) {
    if (v < 1 || v > n) throw std::out_of_range("vertex " + std::to_string(v) + " not in the tree");
    in[v] = covered[v] = 1;
  }
  for (const auto& [u, v] : tree.edges()) {
    if (in[u]) covered[v] = 1;
    if (in[v]) covered[u] = 1;
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (!covered[v]) return false;
  }
  return true;
}

OracleResult oracle_solve(const RootedTree& tree, const Mode& mode, bool materialize,
                          std::size_t cap) {
  check_size(tree);
  const std::size_t n = tree.size();
  const auto nbr = neighbor_masks(tree);
  OracleResult out;
  for (std::size_t k = 0; k <= n; ++k) {
    Mask s = k == 0 ? 0 : (Mask{1} << k) - 1;
    if (k == 32) s = ~Mask{0};
    while (true) {
      if (valid_mask(nbr, n, s, mode)) {
        ++out.count;
        if (materialize) {
          if (out.sets.size() < cap) {
            out.sets.push_back(to_vertices(s));
          } else {
            out.truncated = true;
          }
        }
      }
      if (k == 0) break;
      s = next_combination(s, n);
      if (s == 0) break;
    }
    if (out.count > 0) {
      out.min_size = CostValue::finite(k);
      break;
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> oracle_all_sets(const RootedTree& tree, const Mode& mode) {
  check_size(tree);
  const std::size_t n = tree.size();
  const auto nbr = neighbor_masks(tree);
  std::vector<std::vector<Vertex>> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < limit; ++s) {
    if (valid_mask(nbr, n, static_cast<Mask>(s), mode)) out.push_back(to_vertices(static_cast<Mask>(s)));
  }
  return out;
}

CostValue oracle_domination_number(const RootedTree& tree) {
  check_size(tree);
  const std::size_t n = tree.size();
  auto nbr = neighbor_masks(tree);
  for (std::size_t v = 1; v <= n; ++v) nbr[v] |= Mask{1} << (v - 1);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mask s = (Mask{1} << k) - 1;
    while (s) {
      Mask covered = 0;
      for (Mask t = s; t; t &= t - 1) covered |= nbr[std::countr_zero(t) + 1];
      if (covered == all) return CostValue::finite(k);
      s = next_combination(s, n);
    }
  }
  return kInfinity;
}

}  // namespace onetwo
