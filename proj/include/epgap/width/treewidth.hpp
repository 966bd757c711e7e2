#pragma once

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "epgap/core/contraction_degeneracy.hpp"
#include "epgap/core/decomposition.hpp"
#include "epgap/core/degeneracy.hpp"
#include "epgap/core/limits.hpp"
#include "epgap/core/mask_graph.hpp"

namespace epgap {

struct WidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

namespace detail {

/// Q(S, v) for every v outside S: the vertices outside S ∪ {v} reachable from v through S,
/// i.e. the neighbourhood v has when S has been eliminated first.
inline std::vector<Mask> elimination_neighbourhoods(const std::vector<Mask>& adj, Mask all, Mask eliminated) {
  const int n = static_cast<int>(adj.size());
  const Mask rest = all & ~eliminated;
  std::vector<Mask> q(static_cast<std::size_t>(n), 0);
  for_each_bit(rest, [&](int v) { q[v] = adj[v] & rest; });
  for (Mask comp : mask_components(adj, eliminated)) {
    const Mask boundary = reach_of(adj, comp) & rest;
    for_each_bit(boundary, [&](int v) { q[v] |= boundary; });
  }
  for_each_bit(rest, [&](int v) { q[v] &= ~bit(v); });
  return q;
}

/// Decomposition read off an elimination order: the bag of v is v plus its neighbourhood
/// at elimination time, attached to the earliest later-eliminated member of that
/// neighbourhood. Separate roots (one per component) are chained.
inline TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  if (n == 0) return TreeDecomposition::path({VertexSet(0)});
  const std::vector<Mask> adj = g.adjacency_masks();
  const Mask all = full_mask(n);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<VertexSet> bags;
  std::vector<Edge> edges;
  std::vector<int> roots;
  Mask eliminated = 0;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    const Mask q = elimination_neighbourhoods(adj, all, eliminated)[v];
    bags.push_back(VertexSet::from_mask(n, q | bit(v)));
    int parent = -1;
    for_each_bit(q, [&](int u) {
      if (parent < 0 || position[u] < position[parent]) parent = u;
    });
    if (parent >= 0) {
      edges.emplace_back(i, position[parent]);
    } else {
      roots.push_back(i);
    }
    eliminated |= bit(v);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) edges.emplace_back(roots[i - 1], roots[i]);
  TreeDecomposition td;
  td.tree = Graph(n, edges);
  td.width = TreeDecomposition::width_of(bags);
  td.bags = std::move(bags);
  return td;
}

/// Greedy min-fill elimination order (ties: smaller degree, then smaller id).
inline std::vector<int> min_fill_order(const Graph& g) {
  const int n = g.n();
  std::vector<Mask> adj = g.adjacency_masks();
  Mask rest = full_mask(n);
  std::vector<int> order;
  while (rest != 0) {
    int best = -1;
    int best_fill = 0;
    for_each_bit(rest, [&](int v) {
      const Mask nb = adj[v] & rest;
      int fill = 0;
      for_each_bit(nb, [&](int u) { fill += popcount(nb & ~adj[u] & ~bit(u)); });
      if (best < 0 || fill < best_fill ||
          (fill == best_fill && popcount(nb) < popcount(adj[best] & rest))) {
        best = v;
        best_fill = fill;
      }
    });
    const Mask nb = adj[best] & rest;
    for_each_bit(nb, [&](int u) { adj[u] |= nb & ~bit(u); });
    rest &= ~bit(best);
    order.push_back(best);
  }
  return order;
}

/// Decides tw <= k by depth-first search over eliminated sets; failing sets are memoised.
/// A simplicial vertex of small enough degree is always eliminated first (safe rule).
class TreewidthSearch {
 public:
  TreewidthSearch(const Graph& g, int k) : adj_(g.adjacency_masks()), all_(full_mask(g.n())), k_(k) {}

  bool run() { return dfs(0); }
  const std::vector<int>& order() const { return order_; }

 private:
  bool dfs(Mask eliminated) {
    const Mask rest = all_ & ~eliminated;
    if (popcount(rest) <= k_ + 1) {
      for_each_bit(rest, [&](int v) { order_.push_back(v); });
      return true;
    }
    if (failed_.contains(eliminated)) return false;
    const std::vector<Mask> q = elimination_neighbourhoods(adj_, all_, eliminated);
    std::vector<int> candidates;
    int simplicial = -1;
    for_each_bit(rest, [&](int v) {
      if (popcount(q[v]) > k_) return;
      if (simplicial < 0 && is_clique_mask_in(q, q[v])) simplicial = v;
      candidates.push_back(v);
    });
    if (simplicial >= 0) candidates = {simplicial};
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](int a, int b) { return popcount(q[a]) < popcount(q[b]); });
    for (int v : candidates) {
      order_.push_back(v);
      if (dfs(eliminated | bit(v))) return true;
      order_.pop_back();
    }
    failed_.insert(eliminated);
    return false;
  }

  // Clique test in the current elimination graph, whose adjacency is given by q.
  static bool is_clique_mask_in(const std::vector<Mask>& q, Mask set) {
    bool ok = true;
    for_each_bit(set, [&](int v) {
      if ((q[v] & set) != (set & ~bit(v))) ok = false;
    });
    return ok;
  }

  std::vector<Mask> adj_;
  Mask all_;
  int k_;
  std::vector<int> order_;
  std::unordered_set<Mask> failed_;
};

}  // namespace detail

/// Exact treewidth with a certifying decomposition. Lower bound: greedy contraction
/// degeneracy (never above tw); upper bound: min-fill. Each width between them is decided
/// by the memoised elimination search, smallest first.
inline WidthResult treewidth_exact(const Graph& g, const Limits& limits = {}) {
  require_size(g.n(), limits.treewidth, "treewidth_exact");
  if (g.n() == 0) return {-1, detail::decomposition_from_order(g, {})};
  std::vector<int> best_order = detail::min_fill_order(g);
  TreeDecomposition upper = detail::decomposition_from_order(g, best_order);
  const int lower = std::max(degeneracy(g).value, contraction_degeneracy(g, DegeneracyMode::lower_bound));
  for (int k = lower; k < upper.width; ++k) {
    detail::TreewidthSearch search(g, k);
    if (search.run()) {
      TreeDecomposition td = detail::decomposition_from_order(g, search.order());
      return {td.width, std::move(td)};
    }
  }
  return {upper.width, std::move(upper)};
}

}  // namespace epgap
