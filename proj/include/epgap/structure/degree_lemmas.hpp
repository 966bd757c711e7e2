#pragma once

#include <string>
#include <vector>

#include "epgap/core/degeneracy.hpp"
#include "epgap/core/multigraph.hpp"
#include "epgap/structure/matching.hpp"

namespace epgap {

/// Vertices of degree < 2a·dgn(g); there are more than (1 - 1/a)·n of them.
/// An edgeless graph has dgn = 0, the threshold is 0 and the bound fails, so it is refused.
inline VertexSet low_degree_vertices(const Graph& g, int a) {
  if (a < 1) throw ParameterError("low_degree_vertices: a must be at least 1");
  if (g.n() == 0) throw PreconditionError("low_degree_vertices: empty graph");
  if (g.m() == 0) throw PreconditionError("low_degree_vertices: edgeless graph (degeneracy 0)");
  const long threshold = 2L * a * degeneracy(g).value;
  VertexSet out(g.n());
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) < threshold) out.insert(v);
  }
  return out;
}

struct MultiedgeSelection {
  std::vector<Edge> edges;
  bool by_matching = false;  // the counting procedure fell short and matching was used
};

/// k vertex-disjoint multiedges of multiplicity >= r in a balanced bipartite multigraph
/// with |V1| = |V2| >= 4k²r, all multidegrees 2kr² and dgn < 2kr.
///
/// Counting procedure: on the side with more vertices of simple degree < 2kr, take 2k²r
/// of them (ascending ids); each has multidegree 2kr² spread over < 2kr neighbours, so
/// some neighbour f(v) carries multiplicity >= r. A right vertex is the image of at most
/// 2kr of them, so there are >= k distinct images, each giving one multiedge. If fewer than
/// 2k²r such low-degree vertices exist the procedure falls back to a maximum matching on
/// the heavy multiedges.
inline MultiedgeSelection disjoint_multiedges_traced(const BipartiteMultiGraph& b, int k, int r) {
  if (k < 1 || r < 1) throw ParameterError("disjoint_multiedges: k and r must be positive");
  const MultiGraph& g = b.graph;
  const int left = b.left;
  const int right = b.right;
  if (left + right != g.n()) throw PreconditionError("disjoint_multiedges: side sizes do not add up to n");
  for (const auto& [e, mult] : g.multiedges()) {
    if (b.is_left(e.u) == b.is_left(e.v)) throw PreconditionError("disjoint_multiedges: edge inside one side");
  }
  if (left != right) throw PreconditionError("balanced sides: |V1| != |V2|");
  const long side_min = 4L * k * k * r;
  if (left < side_min) throw PreconditionError("side size: |V1| < 4k²r");
  const int multidegree = 2 * k * r * r;
  for (int v = 0; v < g.n(); ++v) {
    if (g.multidegree(v) != multidegree) {
      throw PreconditionError("multidegree: vertex " + std::to_string(v) + " has multidegree " +
                              std::to_string(g.multidegree(v)) + ", expected " + std::to_string(multidegree));
    }
  }
  const Graph simple = g.simple();
  if (degeneracy(simple).value >= 2 * k * r) throw PreconditionError("degeneracy: dgn >= 2kr");

  MultiedgeSelection out;
  auto low_side = [&](bool left_side) {
    std::vector<int> low;
    const int lo = left_side ? 0 : left;
    const int hi = left_side ? left : left + right;
    for (int v = lo; v < hi; ++v) {
      if (simple.degree(v) < 2 * k * r) low.push_back(v);
    }
    return low;
  };
  std::vector<int> low_left = low_side(true);
  std::vector<int> low_right = low_side(false);
  const std::vector<int>& low = low_left.size() >= low_right.size() ? low_left : low_right;
  const std::size_t want = static_cast<std::size_t>(2L * k * k * r);
  if (low.size() >= want) {
    std::vector<int> image_owner(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < want && static_cast<int>(out.edges.size()) < k; ++i) {
      const int v = low[i];
      int f = -1;
      for (int u : simple.neighbors(v)) {
        if (g.multiplicity(u, v) >= r) {
          f = u;
          break;
        }
      }
      if (f >= 0 && image_owner[f] < 0) {
        image_owner[f] = v;
        out.edges.emplace_back(v, f);
      }
    }
    if (static_cast<int>(out.edges.size()) >= k) return out;
  }
  out.edges.clear();
  out.by_matching = true;
  std::vector<std::vector<int>> heavy(static_cast<std::size_t>(left));
  for (const auto& [e, mult] : g.multiedges()) {
    if (mult >= r) heavy[e.u].push_back(e.v - left);
  }
  const std::vector<int> match = detail::max_bipartite_matching(heavy, right);
  for (int u = 0; u < left && static_cast<int>(out.edges.size()) < k; ++u) {
    if (match[u] >= 0) out.edges.emplace_back(u, left + match[u]);
  }
  if (static_cast<int>(out.edges.size()) < k) {
    throw WitnessError("disjoint_multiedges: fewer than k disjoint heavy multiedges");
  }
  return out;
}

inline std::vector<Edge> disjoint_multiedges(const BipartiteMultiGraph& b, int k, int r) {
  return disjoint_multiedges_traced(b, k, r).edges;
}

}  // namespace epgap
