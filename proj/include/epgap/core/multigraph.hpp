#pragma once

#include <map>
#include <string>
#include <vector>

#include "epgap/core/graph.hpp"

namespace epgap {

/// Loopless multigraph: each unordered pair carries a positive multiplicity.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(int n) : n_(n) {
    if (n < 0) throw ParameterError("negative vertex count");
  }

  /// Adds `count` parallel copies of {a, b}.
  void add_edge(int a, int b, int count = 1) {
    if (a == b) throw ParameterError("loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n_ || b >= n_) throw ParameterError("multiedge endpoint out of range");
    if (count <= 0) throw ParameterError("multiplicity must be positive");
    mult_[Edge(a, b)] += count;
  }

  int n() const noexcept { return n_; }

  int multiplicity(int a, int b) const {
    if (a == b) return 0;
    auto it = mult_.find(Edge(a, b));
    return it == mult_.end() ? 0 : it->second;
  }

  /// Number of edges counted with multiplicity at v.
  int multidegree(int v) const {
    int d = 0;
    for (const auto& [e, m] : mult_) {
      if (e.u == v || e.v == v) d += m;
    }
    return d;
  }

  const std::map<Edge, int>& multiedges() const noexcept { return mult_; }

  /// Underlying simple graph (multiplicities dropped).
  Graph simple() const {
    std::vector<Edge> edges;
    edges.reserve(mult_.size());
    for (const auto& [e, m] : mult_) edges.push_back(e);
    return Graph(n_, edges);
  }

 private:
  int n_ = 0;
  std::map<Edge, int> mult_;
};

/// Bipartite multigraph whose left side is 0..left-1 and right side left..left+right-1.
struct BipartiteMultiGraph {
  MultiGraph graph;
  int left = 0;
  int right = 0;

  bool is_left(int v) const { return v < left; }
};

}  // namespace epgap
