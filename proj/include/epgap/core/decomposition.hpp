#pragma once

#include <vector>

#include "epgap/core/graph.hpp"

namespace epgap {

/// Tree decomposition (T, X): node t of `tree` carries bag X_t.
/// A path decomposition is the special case where `tree` is a path 0-1-...-(b-1).
struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;
  int width = -1;

  int node_count() const { return static_cast<int>(bags.size()); }

  static int width_of(const std::vector<VertexSet>& bags) {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, b.size() - 1);
    return w;
  }

  /// Bags laid out on a path in the given order.
  static TreeDecomposition path(std::vector<VertexSet> bags) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) edges.emplace_back(i, i + 1);
    TreeDecomposition td;
    td.tree = Graph(static_cast<int>(bags.size()), edges);
    td.width = width_of(bags);
    td.bags = std::move(bags);
    return td;
  }
};

}  // namespace epgap
