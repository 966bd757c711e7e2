#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "epgap/core/limits.hpp"
#include "epgap/core/mask_graph.hpp"
#include "epgap/width/flow.hpp"

namespace epgap {

/// k-mesh of order s: (A, B) covering V(G), a tree of max degree 3 inside G[A] holding
/// X = A ∩ B on vertices of tree-degree <= 2 with some X vertex a leaf, and X externally
/// k-connected in B.
struct MeshWitness {
  VertexSet a;
  VertexSet b;
  VertexSet tree_vertices;
  std::vector<Edge> tree_edges;
  int order = 0;
  int connectivity = 0;

  VertexSet boundary() const { return a & b; }
};

namespace detail {

inline void for_each_combination(const std::vector<int>& pool, int size, const std::function<bool(const std::vector<int>&)>& f) {
  const int n = static_cast<int>(pool.size());
  if (size > n || size < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(size));
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> pick(static_cast<std::size_t>(size));
  while (true) {
    for (int i = 0; i < size; ++i) pick[i] = pool[idx[i]];
    if (!f(pick)) return;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// First pair (X', Y') of disjoint subsets of x with |X'| = |Y'| <= k that are NOT joined
/// by |X'| disjoint paths through b - x avoiding edges of G[x]; empty when none exists.
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> external_connectivity_violation(
    const Graph& g, const VertexSet& x, const VertexSet& b, int k) {
  const std::vector<int> members = x.members();
  const VertexSet interior = b - x;
  const EdgeFilter outside_x = [&](int u, int v) { return !(x.contains(u) && x.contains(v)); };
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bad;
  for (int size = 1; size <= k && 2 * size <= static_cast<int>(members.size()) && !bad; ++size) {
    for_each_combination(members, size, [&](const std::vector<int>& xs) {
      std::vector<int> rest;
      for (int v : members) {
        if (std::find(xs.begin(), xs.end(), v) == xs.end() && v > xs[0]) rest.push_back(v);
      }
      for_each_combination(rest, size, [&](const std::vector<int>& ys) {
        const auto paths = disjoint_paths(g, VertexSet::of(g.n(), xs), VertexSet::of(g.n(), ys), interior, outside_x, size);
        if (static_cast<int>(paths.size()) < size) {
          bad = std::make_pair(xs, ys);
          return false;
        }
        return true;
      });
      return !bad;
    });
  }
  return bad;
}

/// Spanning tree of g[vertices] with degree <= 2 on x, <= 3 elsewhere and some x vertex
/// of degree <= 1, by branching over edges in order.
inline std::optional<std::vector<Edge>> constrained_spanning_tree(const Graph& g, const VertexSet& vertices, const VertexSet& x) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (vertices.contains(e.u) && vertices.contains(e.v)) edges.push_back(e);
  }
  const int need = vertices.size() - 1;
  if (need == 0) return std::vector<Edge>{};
  if (!is_connected(g, vertices)) return std::nullopt;
  std::vector<int> degree(static_cast<std::size_t>(g.n()), 0);
  std::vector<int> comp(static_cast<std::size_t>(g.n()));
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int v) {
    while (comp[v] != v) v = comp[v];
    return v;
  };
  auto cap = [&](int v) { return x.contains(v) ? 2 : 3; };
  std::vector<Edge> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (static_cast<int>(chosen.size()) == need) {
      bool leaf = false;
      x.for_each([&](int v) { leaf = leaf || degree[v] <= 1; });
      return leaf;
    }
    if (static_cast<int>(edges.size() - i) < need - static_cast<int>(chosen.size())) return false;
    const Edge e = edges[i];
    const int ru = find(e.u);
    const int rv = find(e.v);
    if (ru != rv && degree[e.u] < cap(e.u) && degree[e.v] < cap(e.v)) {
      comp[ru] = rv;
      ++degree[e.u];
      ++degree[e.v];
      chosen.push_back(e);
      if (rec(i + 1)) return true;
      chosen.pop_back();
      --degree[e.u];
      --degree[e.v];
      comp[ru] = ru;
    }
    return rec(i + 1);
  };
  if (rec(0)) return chosen;
  return std::nullopt;
}

}  // namespace detail

/// Checks the mesh clauses in order: "cover", "tree", "boundary in tree", "leaf", "order",
/// "external connectivity". The last one enumerates all disjoint X', Y' ⊆ A ∩ B of equal
/// size <= k and runs a unit-vertex-capacity flow in G[B] with X as forbidden interior and
/// the edges of G[X] removed; this is guarded by the verify_mesh limits.
inline Verdict verify_mesh(const Graph& g, const MeshWitness& w, const Limits& limits = {}) {
  require_size(w.order, limits.verify_mesh_order, "verify_mesh order");
  require_size(w.connectivity, limits.verify_mesh_connectivity, "verify_mesh connectivity");
  const int n = g.n();
  if (w.a.universe() != n || w.b.universe() != n || w.tree_vertices.universe() != n) {
    return Verdict::fail("cover", "vertex sets over the wrong universe");
  }
  if ((w.a | w.b).size() != n) return Verdict::fail("cover", "A ∪ B misses " + (g.all() - (w.a | w.b)).to_string());
  if (!w.tree_vertices.is_subset_of(w.a)) return Verdict::fail("tree", "tree leaves A");
  if (w.tree_vertices.empty()) return Verdict::fail("tree", "empty tree");
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : w.tree_edges) {
    if (!g.has_edge(e.u, e.v) || !w.tree_vertices.contains(e.u) || !w.tree_vertices.contains(e.v)) {
      return Verdict::fail("tree", "tree edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " not in G[A]");
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  const Graph tree(n, w.tree_edges);
  if (static_cast<int>(tree.m()) != w.tree_vertices.size() - 1 || !is_connected(tree, w.tree_vertices)) {
    return Verdict::fail("tree", "tree edges do not form a tree on the tree vertices");
  }
  for (int v = 0; v < n; ++v) {
    if (degree[v] > 3) return Verdict::fail("tree", "vertex " + std::to_string(v) + " has tree degree > 3");
  }
  const VertexSet x = w.boundary();
  if (!x.is_subset_of(w.tree_vertices)) return Verdict::fail("boundary in tree", "A ∩ B not inside the tree");
  bool bad_degree = false;
  x.for_each([&](int v) { bad_degree = bad_degree || degree[v] > 2; });
  if (bad_degree) return Verdict::fail("boundary in tree", "a vertex of A ∩ B has tree degree > 2");
  bool leaf = false;
  x.for_each([&](int v) { leaf = leaf || degree[v] <= 1; });
  if (!leaf) return Verdict::fail("leaf", "no leaf of the tree lies in A ∩ B");
  if (x.size() != w.order) {
    return Verdict::fail("order", "|A ∩ B| = " + std::to_string(x.size()) + ", expected " + std::to_string(w.order));
  }
  if (auto bad = detail::external_connectivity_violation(g, x, w.b, w.connectivity)) {
    return Verdict::fail("external connectivity", "X' = " + VertexSet::of(n, bad->first).to_string() +
                                                      " and Y' = " + VertexSet::of(n, bad->second).to_string() +
                                                      " are not linked");
  }
  return Verdict::pass();
}

/// Exhaustive search for a k-mesh of order s. Without loss of generality A = V(T): moving
/// A - V(T) into B keeps A ∩ B and only enlarges the graph the paths may use. So for each
/// boundary X the search grows the extra tree vertices Y outside X in increasing size,
/// with B = V - Y; connectivity failures are inherited by every superset of Y.
inline std::optional<MeshWitness> find_mesh(const Graph& g, int k, int s, const Limits& limits = {}) {
  if (k < 1 || s < 1) throw ParameterError("find_mesh: k and s must be positive");
  require_size(g.n(), limits.find_mesh_host, "find_mesh host");
  require_size(s, limits.find_mesh_order, "find_mesh order");
  require_size(k, limits.find_mesh_connectivity, "find_mesh connectivity");
  const int n = g.n();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  std::optional<MeshWitness> found;
  detail::for_each_combination(all, s, [&](const std::vector<int>& xs) {
    const VertexSet x = VertexSet::of(n, xs);
    if (detail::external_connectivity_violation(g, x, g.all(), k)) return true;
    std::vector<int> others;
    for (int v = 0; v < n; ++v) {
      if (!x.contains(v)) others.push_back(v);
    }
    std::vector<Mask> dead;
    for (int extra = 0; extra <= static_cast<int>(others.size()) && !found; ++extra) {
      detail::for_each_combination(others, extra, [&](const std::vector<int>& ys) {
        const VertexSet y = VertexSet::of(n, ys);
        const Mask ym = y.to_mask();
        for (Mask d : dead) {
          if ((d & ~ym) == 0) return true;
        }
        const VertexSet tree_vertices = x | y;
        auto tree = detail::constrained_spanning_tree(g, tree_vertices, x);
        if (!tree) return true;
        const VertexSet b = g.all() - y;
        if (extra > 0 && detail::external_connectivity_violation(g, x, b, k)) {
          dead.push_back(ym);
          return true;
        }
        found = MeshWitness{tree_vertices, b, tree_vertices, *tree, s, k};
        return false;
      });
    }
    return !found;
  });
  return found;
}

}  // namespace epgap
