#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "epgap/core/mask_graph.hpp"
#include "epgap/width/treewidth.hpp"

namespace epgap {

/// Exact pathwidth as vertex separation number: f(S) = min over v in S of
/// max(f(S - v), |boundary(S)|), where boundary(S) are the vertices of S with a neighbour
/// outside S. The certificate lays out v_1..v_n and uses bags {v_i} ∪ boundary(L_{i-1}).
inline WidthResult pathwidth_exact(const Graph& g, const Limits& limits = {}) {
  require_size(g.n(), limits.pathwidth, "pathwidth_exact");
  const int n = g.n();
  if (n == 0) return {-1, TreeDecomposition::path({VertexSet(0)})};
  const std::vector<Mask> adj = g.adjacency_masks();
  const std::size_t states = std::size_t{1} << n;
  auto boundary = [&](Mask s) {
    Mask b = 0;
    for_each_bit(s, [&](int v) {
      if ((adj[v] & ~s) != 0) b |= bit(v);
    });
    return b;
  };
  std::vector<std::uint8_t> f(states, 0);
  std::vector<std::int8_t> last(states, -1);
  for (Mask s = 1; s < states; ++s) {
    const int here = popcount(boundary(s));
    int best = n + 1;
    int best_v = -1;
    for_each_bit(s, [&](int v) {
      const int value = std::max<int>(f[s & ~bit(v)], here);
      if (value < best) {
        best = value;
        best_v = v;
      }
    });
    f[s] = static_cast<std::uint8_t>(best);
    last[s] = static_cast<std::int8_t>(best_v);
  }
  std::vector<int> layout;
  for (Mask s = states - 1; s != 0; s &= ~bit(last[s])) layout.push_back(last[s]);
  std::reverse(layout.begin(), layout.end());
  std::vector<VertexSet> bags;
  Mask placed = 0;
  for (int v : layout) {
    bags.push_back(VertexSet::from_mask(n, boundary(placed) | bit(v)));
    placed |= bit(v);
  }
  TreeDecomposition td = TreeDecomposition::path(std::move(bags));
  return {td.width, std::move(td)};
}

}  // namespace epgap
