#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "epgap/core/error.hpp"
#include "epgap/core/vertex_set.hpp"

namespace epgap {

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on dense vertex ids 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges are merged; loops and out-of-range endpoints are rejected.
  Graph(int n, std::span<const Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
    if (n < 0) throw ParameterError("negative vertex count");
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      if (e.u == e.v) throw ParameterError("loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n) {
        throw ParameterError("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                             std::to_string(e.v));
      }
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const int> neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(adj_.at(static_cast<std::size_t>(v)).size()); }

  bool has_edge(int a, int b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }

  int max_degree() const {
    int d = 0;
    for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.size()));
    return d;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (const auto& row : adj_) d = std::min(d, static_cast<int>(row.size()));
    return d;
  }

  VertexSet all() const { return VertexSet::full(n_); }

  VertexSet neighborhood(int v) const { return VertexSet::of(n_, adj_.at(static_cast<std::size_t>(v))); }

  /// Open neighbourhood of a set: vertices outside s adjacent to some member.
  VertexSet neighborhood(const VertexSet& s) const {
    VertexSet out(n_);
    s.for_each([&](int v) {
      for (int u : adj_[static_cast<std::size_t>(v)]) out.insert(u);
    });
    return out - s;
  }

  /// Adjacency rows as 64-bit masks; only for graphs with at most 64 vertices.
  std::vector<Mask> adjacency_masks() const {
    if (n_ > 64) throw SizeLimitError("mask-based routine needs n <= 64, got " + std::to_string(n_));
    std::vector<Mask> rows(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
      rows[e.u] |= bit(e.v);
      rows[e.v] |= bit(e.u);
    }
    return rows;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
};

/// A derived graph together with the map from its vertices to the parent's vertices.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> to_parent = keep.members();
  std::vector<int> to_child(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_child[to_parent[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (to_child[e.u] >= 0 && to_child[e.v] >= 0) edges.emplace_back(to_child[e.u], to_child[e.v]);
  }
  return {Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

/// Lifts a set expressed in a subgraph's ids back to the parent graph.
inline VertexSet lift(const Subgraph& sub, const VertexSet& s, int parent_n) {
  VertexSet out(parent_n);
  s.for_each([&](int v) { out.insert(sub.to_parent.at(static_cast<std::size_t>(v))); });
  return out;
}

/// Connected components of g restricted to `within`, each as a vertex set, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n());
  std::vector<int> stack;
  within.for_each([&](int s) {
    if (seen.contains(s)) return;
    VertexSet comp(g.n());
    seen.insert(s);
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (int u : g.neighbors(v)) {
        if (within.contains(u) && !seen.contains(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

/// True when g[s] is connected; the empty set counts as disconnected.
inline bool is_connected(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  return components(g, s).size() == 1;
}

inline bool is_connected(const Graph& g) { return g.n() > 0 && is_connected(g, g.all()); }

inline bool is_tree(const Graph& g) { return is_connected(g) && g.m() == g.n() - 1; }

inline bool has_edge_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  bool found = false;
  a.for_each([&](int v) {
    if (found) return;
    for (int u : g.neighbors(v)) {
      if (b.contains(u)) {
        found = true;
        return;
      }
    }
  });
  return found;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.n(), e.v + a.n());
  return Graph(a.n() + b.n(), edges);
}

/// Renames vertex v to perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.m()));
  for (const Edge& e : g.edges()) edges.emplace_back(perm.at(e.u), perm.at(e.v));
  return Graph(g.n(), edges);
}

inline Graph without_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, g.all() - removed).graph;
}

}  // namespace epgap
