#pragma once

#include <algorithm>
#include <vector>

#include "epgap/core/graph.hpp"

namespace epgap {

/// dgn(G) with its certificate. Removing vertices in `elimination_order` never removes a
/// vertex with more than `value` remaining neighbours, and the remaining graph at the moment
/// the maximum is attained has minimum degree `value`.
struct DegeneracyWitness {
  int value = 0;
  std::vector<int> elimination_order;
  int witness_prefix = 0;  ///< order[witness_prefix..] induces a subgraph of min degree `value`
};

/// Repeated minimum-degree removal; ties go to the smallest id.
inline DegeneracyWitness degeneracy(const Graph& g) {
  const int n = g.n();
  DegeneracyWitness w;
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    }
    // deg[best] is the minimum degree of the graph that remains at this step.
    if (deg[best] > w.value) {
      w.value = deg[best];
      w.witness_prefix = step;
    }
    removed[best] = true;
    w.elimination_order.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!removed[u]) --deg[u];
    }
  }
  return w;
}

/// Checks that each vertex has at most `value` neighbours later in the order.
inline bool check_degeneracy_order(const Graph& g, const DegeneracyWitness& w) {
  if (static_cast<int>(w.elimination_order.size()) != g.n()) return false;
  std::vector<int> pos(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < g.n(); ++i) {
    const int v = w.elimination_order[i];
    if (v < 0 || v >= g.n() || pos[v] != -1) return false;
    pos[v] = i;
  }
  for (int v = 0; v < g.n(); ++v) {
    int later = 0;
    for (int u : g.neighbors(v)) later += pos[u] > pos[v] ? 1 : 0;
    if (later > w.value) return false;
  }
  return true;
}

inline double average_degree(const Graph& g) {
  return g.n() == 0 ? 0.0 : 2.0 * g.m() / g.n();
}

}  // namespace epgap
