#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "epgap/core/generators.hpp"
#include "epgap/minors/minor_model.hpp"
#include "epgap/structure/erdos_szekeres.hpp"
#include "epgap/structure/linkage.hpp"
#include "epgap/structure/matching.hpp"

namespace epgap {

namespace detail {

/// Terminal blocks along a path of a terminal tree: consecutive, pairwise adjacent,
/// connected sets each holding at least one terminal, in path order.
struct TreeBlocks {
  std::vector<VertexSet> blocks;
  std::vector<int> block_of;  // vertex -> block index, -1 outside
};

/// Spanning tree of g[tree] with non-terminal leaves pruned away, as adjacency lists.
inline std::vector<std::vector<int>> pruned_spanning_tree(const Graph& g, const VertexSet& tree, const VertexSet& terminals,
                                                          VertexSet& kept) {
  const int n = g.n();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  const int root = terminals.first();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const int v = queue[i];
    for (int u : g.neighbors(v)) {
      if (tree.contains(u) && !seen[u]) {
        seen[u] = 1;
        adj[v].push_back(u);
        adj[u].push_back(v);
        queue.push_back(u);
      }
    }
  }
  kept = VertexSet::of(n, queue);
  std::vector<int> leaves;
  for (int v : queue) {
    if (adj[v].size() <= 1 && !terminals.contains(v)) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const int v = leaves.back();
    leaves.pop_back();
    kept.erase(v);
    for (int u : adj[v]) {
      std::erase(adj[u], v);
      if (adj[u].size() <= 1 && !terminals.contains(u) && kept.contains(u)) leaves.push_back(u);
    }
    adj[v].clear();
  }
  return adj;
}

inline TreeBlocks blocks_along(const std::vector<std::vector<int>>& adj, const VertexSet& kept, const VertexSet& terminals,
                               const std::vector<int>& path) {
  const int n = kept.universe();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (std::size_t i = 0; i < path.size(); ++i) {
    owner[path[i]] = static_cast<int>(i);
    stack.push_back(path[i]);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (owner[u] < 0) {
        owner[u] = owner[v];
        stack.push_back(u);
      }
    }
  }
  std::vector<VertexSet> parts(path.size(), VertexSet(n));
  kept.for_each([&](int v) { parts[owner[v]].insert(v); });
  TreeBlocks out{{}, std::vector<int>(static_cast<std::size_t>(n), -1)};
  VertexSet current(n);
  for (const VertexSet& part : parts) {
    current |= part;
    if (part.intersects(terminals)) {
      current.for_each([&](int v) { out.block_of[v] = static_cast<int>(out.blocks.size()); });
      out.blocks.push_back(current);
      current = VertexSet(n);
    }
  }
  return out;
}

/// Over all leaf-to-leaf paths of the pruned tree, the one cut into the most blocks.
inline TreeBlocks best_blocks(const Graph& g, const VertexSet& tree, const VertexSet& terminals) {
  VertexSet kept;
  const auto adj = pruned_spanning_tree(g, tree, terminals, kept);
  std::vector<int> leaves;
  kept.for_each([&](int v) {
    if (adj[v].size() <= 1) leaves.push_back(v);
  });
  TreeBlocks best;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    std::vector<int> parent(static_cast<std::size_t>(g.n()), -2);
    std::vector<int> queue{leaves[i]};
    parent[leaves[i]] = -1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (int u : adj[queue[h]]) {
        if (parent[u] == -2) {
          parent[u] = queue[h];
          queue.push_back(u);
        }
      }
    }
    for (std::size_t j = i; j < leaves.size(); ++j) {
      if (j == i && leaves.size() > 1) continue;
      std::vector<int> path;
      for (int v = leaves[j]; v != -1; v = parent[v]) path.push_back(v);
      TreeBlocks cand = blocks_along(adj, kept, terminals, path);
      if (cand.blocks.size() > best.blocks.size()) best = std::move(cand);
    }
  }
  return best;
}

inline VertexSet block_range(const std::vector<VertexSet>& blocks, int from, int to) {
  VertexSet out(blocks.front().universe());
  for (int i = from; i <= to; ++i) out |= blocks[i];
  return out;
}

inline VertexSet path_interior(int n, const std::vector<int>& path) {
  VertexSet out(n);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) out.insert(path[i]);
  return out;
}

/// Paths of a pair oriented from `first` to `second`.
inline std::vector<std::vector<int>> oriented_paths(const TerminalPair& pair) {
  std::vector<std::vector<int>> out;
  for (const auto& path : pair.paths) {
    if (pair.first.contains(path.front())) {
      out.push_back(path);
    } else {
      out.emplace_back(path.rbegin(), path.rend());
    }
  }
  return out;
}

inline MinorModel xi_model_from_pair(const Graph& g, const TerminalPair& pair, int r) {
  const int n = g.n();
  const auto paths = oriented_paths(pair);
  const TreeBlocks xb = best_blocks(g, pair.first_tree, pair.first);
  const TreeBlocks zb = best_blocks(g, pair.second_tree, pair.second);
  std::vector<std::vector<int>> adj(xb.blocks.size());
  std::vector<std::vector<int>> via(xb.blocks.size(), std::vector<int>(zb.blocks.size(), -1));
  for (std::size_t p = 0; p < paths.size(); ++p) {
    const int a = xb.block_of[paths[p].front()];
    const int b = zb.block_of[paths[p].back()];
    if (a < 0 || b < 0 || via[a][b] >= 0) continue;
    via[a][b] = static_cast<int>(p);
    adj[a].push_back(b);
  }
  const std::vector<int> match = max_bipartite_matching(adj, static_cast<int>(zb.blocks.size()));
  std::vector<int> xs;
  std::vector<int> zs;
  for (std::size_t a = 0; a < match.size(); ++a) {
    if (match[a] < 0) continue;
    xs.push_back(static_cast<int>(a));
    zs.push_back(match[a]);
  }
  const int need = (r - 1) * (r - 1) + 1;
  if (static_cast<int>(xs.size()) < need) {
    throw PreconditionError("pairs_to_xi_models: only " + std::to_string(xs.size()) + " ordered terminals, need " +
                            std::to_string(need));
  }
  const MonotoneSubsequence mono = erdos_szekeres(zs, r, r);
  MinorModel model{xi_graph(r), g, std::vector<VertexSet>(static_cast<std::size_t>(3 * r), VertexSet(n))};
  const int xlast = static_cast<int>(xb.blocks.size()) - 1;
  const int zlast = static_cast<int>(zb.blocks.size()) - 1;
  for (int t = 0; t < r; ++t) {
    const int a = xs[mono.indices[t]];
    const int c = zs[mono.indices[t]];
    const int a_from = t == 0 ? 0 : a;
    const int a_to = t == r - 1 ? xlast : xs[mono.indices[t + 1]] - 1;
    model.branch_sets[xi_x(r, t)] = block_range(xb.blocks, a_from, a_to);
    int c_from = 0;
    int c_to = 0;
    if (mono.increasing) {
      c_from = t == 0 ? 0 : c;
      c_to = t == r - 1 ? zlast : zs[mono.indices[t + 1]] - 1;
    } else {
      c_from = t == r - 1 ? 0 : zs[mono.indices[t + 1]] + 1;
      c_to = t == 0 ? zlast : c;
    }
    model.branch_sets[xi_z(r, t)] = block_range(zb.blocks, c_from, c_to);
    model.branch_sets[xi_y(r, t)] = path_interior(n, paths[via[a][c]]);
  }
  return model;
}

inline void check_models(const std::vector<MinorModel>& models, const char* what) {
  for (const auto& m : models) {
    if (Verdict v = verify_model(m); !v) throw WitnessError(std::string(what) + ": model fails " + v.clause + ": " + v.detail);
  }
  if (!pairwise_disjoint(models)) throw WitnessError(std::string(what) + ": models overlap");
}

inline void require_pairs(const Graph& g, const PairedLinkage& pl, int r, int k, const char* what) {
  if (r < 1 || k < 1) throw ParameterError(std::string(what) + ": r and k must be positive");
  if (Verdict v = verify_paired_linkage(g, pl); !v) throw PreconditionError(v.clause + ": " + v.detail);
  if (static_cast<int>(pl.pairs.size()) < k) throw PreconditionError(std::string(what) + ": fewer than k pairs");
}

}  // namespace detail

/// k disjoint Ξ_r models, one per pair. Each terminal tree is pruned to a tree whose
/// leaves are terminals and cut along its best leaf-to-leaf path into consecutive blocks;
/// the connecting paths match X-blocks to Z-blocks, and a monotone subsequence of length r
/// of that matching (Erdős–Szekeres) gives the rows x, z with the path interiors as rungs.
inline std::vector<MinorModel> pairs_to_xi_models(const Graph& g, const PairedLinkage& pl, int r, int k) {
  detail::require_pairs(g, pl, r, k, "pairs_to_xi_models");
  std::vector<MinorModel> out;
  for (int i = 0; i < k; ++i) out.push_back(detail::xi_model_from_pair(g, pl.pairs[i], r));
  detail::check_models(out, "pairs_to_xi_models");
  return out;
}

/// k disjoint K_{2,r} models: the two terminal trees are the sides, the interiors of r
/// connecting paths the middle vertices.
inline std::vector<MinorModel> pairs_to_k2r_models(const Graph& g, const PairedLinkage& pl, int r, int k) {
  detail::require_pairs(g, pl, r, k, "pairs_to_k2r_models");
  std::vector<MinorModel> out;
  for (int i = 0; i < k; ++i) {
    const TerminalPair& pair = pl.pairs[i];
    if (static_cast<int>(pair.paths.size()) < r) throw PreconditionError("pairs_to_k2r_models: pair with fewer than r paths");
    MinorModel m{complete_bipartite(2, r), g, {pair.first_tree, pair.second_tree}};
    for (int t = 0; t < r; ++t) {
      if (pair.paths[t].size() < 3) throw PreconditionError("pairs_to_k2r_models: path of length < 2");
      m.branch_sets.push_back(detail::path_interior(g.n(), pair.paths[t]));
    }
    out.push_back(std::move(m));
  }
  detail::check_models(out, "pairs_to_k2r_models");
  return out;
}

}  // namespace epgap
