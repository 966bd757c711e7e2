#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>
#include <vector>

#include "epgap/core/graph.hpp"

namespace epgap {

using EdgeFilter = std::function<bool(int, int)>;

namespace detail {

/// Unit-capacity flow network with residual arcs; small and allocation-light.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to, int cap = 1) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    while (flow < limit && augment(s, t)) ++flow;
    return flow;
  }

  /// Successor of `node` along an arc carrying one unit of flow, consuming that unit.
  int take_flow_arc(int node) {
    for (int a = head_[node]; a != -1; a = arcs_[a].next) {
      if ((a & 1) == 0 && arcs_[a ^ 1].cap > 0 && used_[a] == 0) {
        used_[a] = 1;
        return arcs_[a].to;
      }
    }
    return -1;
  }

  void prepare_decomposition() { used_.assign(arcs_.size(), 0); }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };

  bool augment(int s, int t) {
    std::vector<int> via(head_.size(), -1);
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> queue;
    queue.push(s);
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const int v = queue.front();
      queue.pop();
      for (int a = head_[v]; a != -1; a = arcs_[a].next) {
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          via[arcs_[a].to] = a;
          queue.push(arcs_[a].to);
        }
      }
    }
    if (!seen[t]) return false;
    for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
      arcs_[via[v]].cap -= 1;
      arcs_[via[v] ^ 1].cap += 1;
    }
    return true;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<char> used_;
};

}  // namespace detail

/// Maximum family of vertex-disjoint paths, each from a vertex of `sources` to a vertex of
/// `sinks`, whose interior vertices lie in `interior` and whose edges all pass `edge_ok`.
/// Sources and sinks must be disjoint and outside `interior`. Stops after `limit` paths.
/// Paths are returned source first.
inline std::vector<std::vector<int>> disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                                                    const VertexSet& interior, const EdgeFilter& edge_ok = {},
                                                    int limit = INT_MAX) {
  const int n = g.n();
  // node v_in = 2v, v_out = 2v + 1, source 2n, sink 2n + 1
  const int s = 2 * n;
  const int t = 2 * n + 1;
  detail::UnitFlow net(2 * n + 2);
  auto usable = [&](int v) { return sources.contains(v) || sinks.contains(v) || interior.contains(v); };
  for (int v = 0; v < n; ++v) {
    if (usable(v)) net.add_arc(2 * v, 2 * v + 1);
  }
  sources.for_each([&](int v) { net.add_arc(s, 2 * v); });
  sinks.for_each([&](int v) { net.add_arc(2 * v + 1, t); });
  auto can_leave = [&](int v) { return sources.contains(v) || interior.contains(v); };
  auto can_enter = [&](int v) { return sinks.contains(v) || interior.contains(v); };
  for (const Edge& e : g.edges()) {
    if (edge_ok && !edge_ok(e.u, e.v)) continue;
    if (can_leave(e.u) && can_enter(e.v)) net.add_arc(2 * e.u + 1, 2 * e.v);
    if (can_leave(e.v) && can_enter(e.u)) net.add_arc(2 * e.v + 1, 2 * e.u);
  }
  const int flow = net.max_flow(s, t, limit);
  net.prepare_decomposition();
  std::vector<std::vector<int>> paths;
  for (int i = 0; i < flow; ++i) {
    std::vector<int> path;
    int node = net.take_flow_arc(s);
    while (node != t) {
      if (node % 2 == 0) path.push_back(node / 2);
      node = net.take_flow_arc(node);
    }
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace epgap
