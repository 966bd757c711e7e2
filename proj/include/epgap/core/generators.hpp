#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "epgap/core/decomposition.hpp"
#include "epgap/core/graph.hpp"
#include "epgap/core/rng.hpp"

namespace epgap {

namespace detail {
inline void require_positive(int value, const char* what) {
  if (value < 1) throw ParameterError(std::string(what) + " must be positive, got " + std::to_string(value));
}
}  // namespace detail

inline Graph complete_graph(int n) {
  detail::require_positive(n, "complete: n");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

/// K_{p,q}: sides 0..p-1 and p..p+q-1.
inline Graph complete_bipartite(int p, int q) {
  detail::require_positive(p, "complete_bipartite: p");
  detail::require_positive(q, "complete_bipartite: q");
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u) {
    for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
  }
  return Graph(p + q, edges);
}

inline int xi_x(int /*r*/, int i) { return i; }
inline int xi_y(int r, int i) { return r + i; }
inline int xi_z(int r, int i) { return 2 * r + i; }

/// Xi_r: rows x_0..x_{r-1} and z_0..z_{r-1} are paths, joined by rungs x_i - y_i - z_i.
/// Ids: x_i = i, y_i = r + i, z_i = 2r + i.
inline Graph xi_graph(int r) {
  detail::require_positive(r, "xi: r");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < r; ++i) {
    edges.emplace_back(xi_x(r, i), xi_x(r, i + 1));
    edges.emplace_back(xi_z(r, i), xi_z(r, i + 1));
  }
  for (int i = 0; i < r; ++i) {
    edges.emplace_back(xi_x(r, i), xi_y(r, i));
    edges.emplace_back(xi_y(r, i), xi_z(r, i));
  }
  return Graph(3 * r, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw ParameterError("cycle: n must be at least 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

/// Path on n vertices.
inline Graph path_graph(int n) {
  detail::require_positive(n, "path: n");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

/// K_{1,n}: centre 0 and leaves 1..n.
inline Graph star_graph(int n) {
  detail::require_positive(n, "star: n");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, i);
  return Graph(n + 1, edges);
}

/// rows x cols grid, vertex (i, j) has id i * cols + j.
inline Graph grid_graph(int rows, int cols) {
  detail::require_positive(rows, "grid: rows");
  detail::require_positive(cols, "grid: cols");
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) edges.emplace_back(i * cols + j, (i + 1) * cols + j);
    }
  }
  return Graph(rows * cols, edges);
}

/// Complete ternary tree of the given height: the root has three children, every other
/// internal node two; all 3 * 2^(height-1) leaves sit at depth `height`.
inline Graph complete_ternary_tree(int height) {
  if (height < 0) throw ParameterError("ternary tree height must be non-negative");
  std::vector<Edge> edges;
  std::vector<int> frontier{0};
  int next = 1;
  for (int depth = 0; depth < height; ++depth) {
    std::vector<int> grown;
    for (int v : frontier) {
      const int kids = depth == 0 ? 3 : 2;
      for (int c = 0; c < kids; ++c) {
        edges.emplace_back(v, next);
        grown.push_back(next++);
      }
    }
    frontier = std::move(grown);
  }
  return Graph(next, edges);
}

inline Graph disjoint_copies(int k, const Graph& base) {
  detail::require_positive(k, "disjoint_copies: k");
  Graph out(0, std::vector<Edge>{});
  for (int i = 0; i < k; ++i) out = disjoint_union(out, base);
  return out;
}

inline Graph random_gnp(int n, double p, std::uint64_t seed) {
  detail::require_positive(n, "random_gnp: n");
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterError("random_gnp: probability outside [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

/// Random tree with maximum degree 3: vertex i attaches to a uniformly chosen earlier
/// vertex that still has degree below 3.
inline Graph random_ternary_tree(int n, std::uint64_t seed) {
  detail::require_positive(n, "random_ternary_tree: n");
  Rng rng(seed);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<int> open{0};
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const std::size_t pick = rng.below(open.size());
    const int parent = open[pick];
    edges.emplace_back(parent, v);
    if (++degree[parent] == 3) {
      open[pick] = open.back();
      open.pop_back();
    }
    degree[v] = 1;
    open.push_back(v);
  }
  return Graph(n, edges);
}

struct GraphWithDecomposition {
  Graph graph;
  TreeDecomposition decomposition;
};

/// Random graph of pathwidth at most 2 together with a width-<=2 path decomposition.
/// A window of at most two active vertices slides left to right; each new vertex is joined
/// to a random subset of the window, then one window vertex (chosen at random) retires.
/// Labels are finally shuffled so vertex ids carry no positional information.
inline GraphWithDecomposition random_pw2(int n, std::uint64_t seed) {
  detail::require_positive(n, "random_pw2: n");
  Rng rng(seed);
  std::vector<int> label = rng.permutation(n);
  std::vector<Edge> edges;
  std::vector<VertexSet> bags;
  std::vector<int> window;
  for (int v = 0; v < n; ++v) {
    VertexSet bag(n);
    for (int w : window) {
      bag.insert(label[w]);
      if (rng.chance(0.7)) edges.emplace_back(label[w], label[v]);
    }
    bag.insert(label[v]);
    bags.push_back(std::move(bag));
    window.push_back(v);
    if (window.size() > 2) window.erase(window.begin() + static_cast<long>(rng.below(2)));
  }
  return {Graph(n, edges), TreeDecomposition::path(std::move(bags))};
}

/// Named families accepted by generate().
namespace family {
struct Complete { int n; };
struct CompleteBipartite { int p; int q; };
struct Xi { int r; };
struct Cycle { int n; };
struct Path { int n; };
struct Star { int n; };
struct Grid { int rows; int cols; };
struct CompleteTernaryTree { int height; };
struct DisjointCopies { int k; Graph base; };
struct RandomGnp { int n; double p; std::uint64_t seed; };
struct RandomTernaryTree { int n; std::uint64_t seed; };
struct RandomPw2 { int n; std::uint64_t seed; };
}  // namespace family

using Family = std::variant<family::Complete, family::CompleteBipartite, family::Xi, family::Cycle,
                            family::Path, family::Star, family::Grid, family::CompleteTernaryTree,
                            family::DisjointCopies, family::RandomGnp, family::RandomTernaryTree,
                            family::RandomPw2>;

inline Graph generate(const Family& f) {
  struct Visitor {
    Graph operator()(const family::Complete& c) const { return complete_graph(c.n); }
    Graph operator()(const family::CompleteBipartite& c) const { return complete_bipartite(c.p, c.q); }
    Graph operator()(const family::Xi& c) const { return xi_graph(c.r); }
    Graph operator()(const family::Cycle& c) const { return cycle_graph(c.n); }
    Graph operator()(const family::Path& c) const { return path_graph(c.n); }
    Graph operator()(const family::Star& c) const { return star_graph(c.n); }
    Graph operator()(const family::Grid& c) const { return grid_graph(c.rows, c.cols); }
    Graph operator()(const family::CompleteTernaryTree& c) const { return complete_ternary_tree(c.height); }
    Graph operator()(const family::DisjointCopies& c) const { return disjoint_copies(c.k, c.base); }
    Graph operator()(const family::RandomGnp& c) const { return random_gnp(c.n, c.p, c.seed); }
    Graph operator()(const family::RandomTernaryTree& c) const { return random_ternary_tree(c.n, c.seed); }
    Graph operator()(const family::RandomPw2& c) const { return random_pw2(c.n, c.seed).graph; }
  };
  return std::visit(Visitor{}, f);
}

}  // namespace epgap
