#pragma once

#include <stdexcept>
#include <vector>

#include "epgap/structure/trees.hpp"

namespace epgap {

struct PartitionRun {
  Partition partition;
  int moves = 0;
  std::vector<int> potential;  // internal edge count before the first move and after each
};

/// Local search for a k-partition where every vertex keeps at least deg(v)/k - 1
/// neighbours in its own part. Start from v mod k; repeatedly take the smallest violating
/// vertex and move it to the part holding most of its neighbours (lowest index on ties).
/// A violator has fewer than deg/k - 1 neighbours at home and at least deg/k in the best
/// part, so each move raises the number of internal edges: at most |E| moves.
inline PartitionRun stiebitz_partition_run(const Graph& g, int k) {
  if (k < 1) throw ParameterError("stiebitz_partition: k must be positive");
  const int n = g.n();
  std::vector<int> part(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) part[v] = v % k;
  auto internal_edges = [&] {
    int c = 0;
    for (const Edge& e : g.edges()) c += part[e.u] == part[e.v] ? 1 : 0;
    return c;
  };
  PartitionRun run;
  run.potential.push_back(internal_edges());
  std::vector<int> toward(static_cast<std::size_t>(k));
  while (true) {
    int mover = -1;
    for (int v = 0; v < n && mover < 0; ++v) {
      int home = 0;
      for (int u : g.neighbors(v)) home += part[u] == part[v] ? 1 : 0;
      if (static_cast<long>(k) * (home + 1) < g.degree(v)) mover = v;
    }
    if (mover < 0) break;
    std::fill(toward.begin(), toward.end(), 0);
    for (int u : g.neighbors(mover)) ++toward[part[u]];
    int best = 0;
    for (int i = 1; i < k; ++i) {
      if (toward[i] > toward[best]) best = i;
    }
    part[mover] = best;
    ++run.moves;
    run.potential.push_back(internal_edges());
    if (run.moves > g.m()) throw std::logic_error("stiebitz_partition: move budget |E| exceeded");
  }
  run.partition.parts.assign(static_cast<std::size_t>(k), VertexSet(n));
  for (int v = 0; v < n; ++v) run.partition.parts[part[v]].insert(v);
  return run;
}

inline Partition stiebitz_partition(const Graph& g, int k) { return stiebitz_partition_run(g, k).partition; }

/// Degree of v inside `part`.
inline int degree_within(const Graph& g, int v, const VertexSet& part) {
  int d = 0;
  for (int u : g.neighbors(v)) d += part.contains(u) ? 1 : 0;
  return d;
}

}  // namespace epgap
