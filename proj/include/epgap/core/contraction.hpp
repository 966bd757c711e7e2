#pragma once

#include <string>
#include <vector>

#include "epgap/core/graph.hpp"

namespace epgap {

/// Result of contracting an edge: the new graph and where each old vertex went.
struct Contraction {
  Graph graph;
  std::vector<int> old_to_new;
};

/// Contracts e = {u, v}. The merged vertex takes the id of min(u, v); vertices above
/// max(u, v) shift down by one. Parallel edges collapse.
inline Contraction contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw MissingEdgeError("cannot contract " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                           ": not an edge");
  }
  std::vector<int> map(static_cast<std::size_t>(g.n()));
  for (int w = 0; w < g.n(); ++w) map[w] = w < e.v ? w : w - 1;
  map[e.v] = map[e.u];
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (map[f.u] != map[f.v]) edges.emplace_back(map[f.u], map[f.v]);
  }
  return {Graph(g.n() - 1, edges), std::move(map)};
}

/// A minor of some host given by its branch sets: vertex i of `graph` is the contraction
/// of host set `branch_sets[i]`.
struct Minor {
  Graph graph;
  std::vector<VertexSet> branch_sets;
};

/// Quotient of g by the given pairwise disjoint connected sets; vertices outside every set
/// are deleted. Two quotient vertices are adjacent iff some host edge joins their sets.
inline Minor quotient(const Graph& g, std::vector<VertexSet> sets) {
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
    sets[i].for_each([&](int v) {
      if (owner[v] != -1) throw ParameterError("quotient: branch sets overlap at vertex " + std::to_string(v));
      owner[v] = i;
    });
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = owner[e.u];
    const int b = owner[e.v];
    if (a >= 0 && b >= 0 && a != b) edges.emplace_back(a, b);
  }
  return {Graph(static_cast<int>(sets.size()), edges), std::move(sets)};
}

}  // namespace epgap
