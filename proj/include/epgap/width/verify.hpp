#pragma once

#include <string>
#include <vector>

#include "epgap/core/decomposition.hpp"
#include "epgap/core/error.hpp"

namespace epgap {

/// Checks a tree decomposition clause by clause: "tree shape", "vertex coverage",
/// "edge coverage", "connectivity of occurrence", then the declared "width".
inline Verdict verify_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int nodes = td.node_count();
  if (td.tree.n() != nodes) {
    return Verdict::fail("tree shape", std::to_string(nodes) + " bags for " + std::to_string(td.tree.n()) + " nodes");
  }
  if (nodes == 0 || !is_tree(td.tree)) return Verdict::fail("tree shape", "decomposition tree is not a tree");
  for (int t = 0; t < nodes; ++t) {
    if (td.bags[t].universe() != g.n()) return Verdict::fail("tree shape", "bag " + std::to_string(t) + " has wrong universe");
  }
  VertexSet covered(g.n());
  for (const auto& b : td.bags) covered |= b;
  if (covered.size() != g.n()) {
    return Verdict::fail("vertex coverage", "vertices " + (g.all() - covered).to_string() + " in no bag");
  }
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (const auto& b : td.bags) {
      if (b.contains(e.u) && b.contains(e.v)) {
        found = true;
        break;
      }
    }
    if (!found) {
      return Verdict::fail("edge coverage", "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " in no bag");
    }
  }
  for (int v = 0; v < g.n(); ++v) {
    VertexSet holding(nodes);
    for (int t = 0; t < nodes; ++t) {
      if (td.bags[t].contains(v)) holding.insert(t);
    }
    if (!is_connected(td.tree, holding)) {
      return Verdict::fail("connectivity of occurrence",
                           "bags holding vertex " + std::to_string(v) + " " + holding.to_string() + " are not connected");
    }
  }
  const int actual = TreeDecomposition::width_of(td.bags);
  if (actual != td.width) {
    return Verdict::fail("width", "declared " + std::to_string(td.width) + ", actual " + std::to_string(actual));
  }
  return Verdict::pass();
}

/// True when the decomposition tree is a path (nodes of degree at most 2).
inline bool is_path_decomposition(const TreeDecomposition& td) {
  for (int t = 0; t < td.tree.n(); ++t) {
    if (td.tree.degree(t) > 2) return false;
  }
  return true;
}

}  // namespace epgap
