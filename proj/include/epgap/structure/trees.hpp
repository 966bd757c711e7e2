#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "epgap/core/graph.hpp"

namespace epgap {

/// Parts of a vertex partition, in a meaningful order (path order, part index, ...).
struct Partition {
  std::vector<VertexSet> parts;
};

namespace detail {

inline void require_ternary_tree(const Graph& t, const char* what) {
  if (!is_tree(t)) throw PreconditionError(std::string(what) + ": input is not a tree");
  if (t.max_degree() > 3) throw PreconditionError(std::string(what) + ": tree has a vertex of degree > 3");
}

inline std::vector<int> bfs_parents(const Graph& t, int root, std::vector<int>* order = nullptr) {
  std::vector<int> parent(static_cast<std::size_t>(t.n()), -2);
  std::vector<int> queue{root};
  parent[root] = -1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int u : t.neighbors(queue[i])) {
      if (parent[u] == -2) {
        parent[u] = queue[i];
        queue.push_back(u);
      }
    }
  }
  if (order) *order = std::move(queue);
  return parent;
}

}  // namespace detail

/// Vertex-disjoint subtrees of a max-degree-3 tree, each holding at least k marked
/// vertices; at least floor(|x| / (2k - 1)) - 1 of them.
///
/// The tree is rooted at its smallest vertex of degree <= 2, so every vertex has at most
/// two children. Bottom-up, a vertex collects the marks of its uncut children's subtrees
/// and is cut off together with them once it reaches k; children hold < k each, so a cut
/// piece holds at most 2k - 1 marks and fewer than k are left over at the root.
inline std::vector<VertexSet> tree_cut(const Graph& t, const VertexSet& x, int k) {
  if (k < 2) throw ParameterError("tree_cut: k must be at least 2");
  detail::require_ternary_tree(t, "tree_cut");
  if (x.universe() != t.n()) throw PreconditionError("tree_cut: marker set over the wrong universe");
  int root = 0;
  while (t.degree(root) > 2) ++root;
  std::vector<int> order;
  const std::vector<int> parent = detail::bfs_parents(t, root, &order);
  std::vector<int> count(static_cast<std::size_t>(t.n()), 0);
  std::vector<char> cut(static_cast<std::size_t>(t.n()), 0);
  std::vector<int> cut_at;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    count[v] += x.contains(v) ? 1 : 0;
    if (count[v] >= k) {
      cut[v] = 1;
      cut_at.push_back(v);
    } else if (parent[v] >= 0) {
      count[parent[v]] += count[v];
    }
  }
  std::vector<VertexSet> pieces;
  for (int top : cut_at) {
    VertexSet piece(t.n());
    std::vector<int> stack{top};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      piece.insert(v);
      for (int u : t.neighbors(v)) {
        if (u != parent[v] && !cut[u]) stack.push_back(u);
      }
    }
    pieces.push_back(std::move(piece));
  }
  std::sort(pieces.begin(), pieces.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  return pieces;
}

inline int tree_cut_guarantee(int marked, int k) { return marked / (2 * k - 1) - 1; }

/// A longest path of a tree (double BFS, exact on trees), listed end to end.
inline std::vector<int> long_path(const Graph& t) {
  if (t.n() == 0) throw PreconditionError("long_path: empty tree");
  detail::require_ternary_tree(t, "long_path");
  auto farthest = [&](int from, std::vector<int>& parent) {
    std::vector<int> order;
    parent = detail::bfs_parents(t, from, &order);
    return order.back();
  };
  std::vector<int> parent;
  const int a = farthest(0, parent);
  const int b = farthest(a, parent);
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  return path;
}

/// The lower bound 2·log2(2|X|/3) on the diameter, X the vertices of degree <= 2.
inline double long_path_bound(const Graph& t) {
  int x = 0;
  for (int v = 0; v < t.n(); ++v) x += t.degree(v) <= 2 ? 1 : 0;
  return 2.0 * std::log2(2.0 * x / 3.0);
}

/// For a path P of tree t, the parts M_u (u on P) where M_u is the component of
/// t - (P - u) containing u. Parts follow the order of P.
inline Partition path_partition(const Graph& t, const std::vector<int>& path) {
  if (!is_tree(t)) throw PreconditionError("path_partition: input is not a tree");
  if (path.empty()) throw PreconditionError("path_partition: empty path");
  VertexSet on_path(t.n());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= t.n() || on_path.contains(path[i])) {
      throw PreconditionError("path_partition: path repeats or leaves the tree");
    }
    if (i > 0 && !t.has_edge(path[i - 1], path[i])) throw PreconditionError("path_partition: consecutive vertices not adjacent");
    on_path.insert(path[i]);
  }
  Partition out;
  for (int u : path) {
    VertexSet part(t.n());
    std::vector<int> stack{u};
    part.insert(u);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : t.neighbors(v)) {
        if (!on_path.contains(w) && !part.contains(w)) {
          part.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.parts.push_back(std::move(part));
  }
  return out;
}

}  // namespace epgap
