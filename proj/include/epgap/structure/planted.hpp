#pragma once

#include <cstdint>
#include <vector>

#include "epgap/core/generators.hpp"
#include "epgap/core/multigraph.hpp"
#include "epgap/core/rng.hpp"
#include "epgap/structure/linkage.hpp"
#include "epgap/width/mesh.hpp"

namespace epgap {

// Seeded generators that plant a witness in a random graph. Every generator relabels
// the vertices with a random permutation so that ids carry no structure.

struct PlantedMesh {
  Graph graph;
  MeshWitness mesh;
};

struct PlantedLinkage {
  Graph graph;
  LinkageWitness linkage;
};

struct PlantedPairs {
  Graph graph;
  PairedLinkage pairs;
};

enum class PartnerOrder { random, identity, reversed };

namespace detail {

class PlantBuilder {
 public:
  int add() { return n_++; }
  void edge(int u, int v) { edges_.emplace_back(u, v); }
  int n() const { return n_; }

  /// Random spine tree over `terminals` in order: consecutive terminals joined directly or
  /// through one extra vertex, and sometimes a dangling non-terminal vertex.
  std::vector<int> spine(Rng& rng, int terminals, std::vector<int>& tree) {
    std::vector<int> out;
    for (int i = 0; i < terminals; ++i) {
      const int t = add();
      if (!tree.empty()) {
        if (rng.chance(0.4)) {
          const int mid = add();
          edge(tree.back(), mid);
          edge(mid, t);
          tree.push_back(mid);
        } else {
          edge(tree.back(), t);
        }
      }
      tree.push_back(t);
      out.push_back(t);
      if (rng.chance(0.25)) {
        const int dangle = add();
        edge(t, dangle);
        tree.push_back(dangle);
        tree.push_back(t);  // keep the spine end last
        tree.erase(tree.end() - 3);
      }
    }
    return out;
  }

  std::vector<int> path(Rng& rng, int from, int to) {
    std::vector<int> out{from};
    const int inner = rng.between(1, 3);
    for (int i = 0; i < inner; ++i) out.push_back(add());
    out.push_back(to);
    for (std::size_t i = 1; i < out.size(); ++i) edge(out[i - 1], out[i]);
    return out;
  }

  /// Noise vertices attached to random vertices of `anchors` (and to earlier noise).
  void noise(Rng& rng, int count, std::vector<int> anchors) {
    for (int i = 0; i < count && !anchors.empty(); ++i) {
      const int v = add();
      const int degree = rng.between(1, 2);
      for (int j = 0; j < degree; ++j) edge(v, anchors[rng.below(anchors.size())]);
      anchors.push_back(v);
    }
  }

  std::vector<int> relabel(Rng& rng) { return rng.permutation(n_); }

  Graph graph(const std::vector<int>& perm) const {
    std::vector<Edge> e;
    for (const Edge& x : edges_) e.emplace_back(perm[x.u], perm[x.v]);
    return Graph(n_, e);
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

inline VertexSet mapped(int n, const std::vector<int>& perm, const std::vector<int>& vs) {
  VertexSet out(n);
  for (int v : vs) out.insert(perm[v]);
  return out;
}

inline std::vector<int> mapped_path(const std::vector<int>& perm, const std::vector<int>& path) {
  std::vector<int> out;
  for (int v : path) out.push_back(perm[v]);
  return out;
}

}  // namespace detail

/// A k-mesh of order s: a random ternary tree carries the s boundary vertices (one of
/// them a leaf); each boundary vertex gets a private connector, the connectors form a
/// clique (so X is externally s-connected), and noise hangs off the connectors.
inline PlantedMesh planted_mesh(int s, int k, std::uint64_t seed) {
  if (s < 1 || k < 1) throw ParameterError("planted_mesh: s and k must be positive");
  Rng rng(seed);
  Graph tree;
  std::vector<int> leaves;
  std::vector<int> middles;
  for (int m = s + rng.between(0, s);; ++m) {
    tree = random_ternary_tree(m, rng.next());
    leaves.clear();
    middles.clear();
    for (int v = 0; v < m; ++v) {
      if (tree.degree(v) <= 1) leaves.push_back(v);
      if (tree.degree(v) == 2) middles.push_back(v);
    }
    if (static_cast<int>(leaves.size() + middles.size()) >= s) break;
  }
  rng.shuffle(leaves);
  std::vector<int> pool(leaves.begin() + 1, leaves.end());
  pool.insert(pool.end(), middles.begin(), middles.end());
  rng.shuffle(pool);
  std::vector<int> x{leaves[0]};
  x.insert(x.end(), pool.begin(), pool.begin() + (s - 1));

  detail::PlantBuilder b;
  for (int v = 0; v < tree.n(); ++v) b.add();
  for (const Edge& e : tree.edges()) b.edge(e.u, e.v);
  const int chords = rng.between(0, tree.n() / 3);
  for (int i = 0; i < chords; ++i) {
    const int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(tree.n())));
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(tree.n())));
    if (u != v) b.edge(u, v);
  }
  std::vector<int> connectors;
  for (int v : x) {
    const int c = b.add();
    b.edge(v, c);
    for (int d : connectors) b.edge(c, d);
    connectors.push_back(c);
  }
  b.noise(rng, rng.between(0, s), connectors);

  const std::vector<int> perm = b.relabel(rng);
  const int n = b.n();
  PlantedMesh out{b.graph(perm), {}};
  std::vector<int> tree_ids(static_cast<std::size_t>(tree.n()));
  for (int v = 0; v < tree.n(); ++v) tree_ids[v] = v;
  out.mesh.a = detail::mapped(n, perm, tree_ids);
  out.mesh.tree_vertices = out.mesh.a;
  std::vector<int> rest = x;
  for (int v = tree.n(); v < n; ++v) rest.push_back(v);
  out.mesh.b = detail::mapped(n, perm, rest);
  for (const Edge& e : tree.edges()) out.mesh.tree_edges.emplace_back(perm[e.u], perm[e.v]);
  out.mesh.order = s;
  out.mesh.connectivity = k;
  return out;
}

/// A linkage shaped for linkage_to_pairs: 8p²q terminal sets of size q on random spine
/// trees and 4p²q² paths, every terminal the end of exactly one path. The first p sets of
/// each half are fully matched to each other, the remaining terminals at random.
inline PlantedLinkage planted_linkage(int p, int q, std::uint64_t seed) {
  if (p < 1 || q < 1) throw ParameterError("planted_linkage: p and q must be positive");
  Rng rng(seed);
  detail::PlantBuilder b;
  const int half = 4 * p * p * q;
  std::vector<std::vector<int>> terminals;
  std::vector<std::vector<int>> trees;
  for (int i = 0; i < 2 * half; ++i) {
    std::vector<int> tree;
    terminals.push_back(b.spine(rng, q, tree));
    trees.push_back(std::move(tree));
  }
  std::vector<int> left_rest;
  std::vector<int> right_rest;
  std::vector<std::vector<int>> paths;
  for (int i = 0; i < half; ++i) {
    for (int j = 0; j < q; ++j) {
      if (i < p) {
        paths.push_back(b.path(rng, terminals[i][j], terminals[half + i][j]));
      } else {
        left_rest.push_back(terminals[i][j]);
        right_rest.push_back(terminals[half + i][j]);
      }
    }
  }
  rng.shuffle(right_rest);
  for (std::size_t i = 0; i < left_rest.size(); ++i) paths.push_back(b.path(rng, left_rest[i], right_rest[i]));
  rng.shuffle(paths);
  std::vector<int> interiors;
  for (const auto& path : paths) interiors.insert(interiors.end(), path.begin() + 1, path.end() - 1);
  b.noise(rng, rng.between(0, half), interiors);

  const std::vector<int> perm = b.relabel(rng);
  const int n = b.n();
  PlantedLinkage out{b.graph(perm), {}};
  out.linkage.tree_support = VertexSet(n);
  for (int i = 0; i < 2 * half; ++i) {
    out.linkage.terminal_sets.push_back(detail::mapped(n, perm, terminals[i]));
    out.linkage.trees.push_back(detail::mapped(n, perm, trees[i]));
    out.linkage.tree_support |= out.linkage.trees.back();
  }
  for (const auto& path : paths) out.linkage.paths.push_back(detail::mapped_path(perm, path));
  return out;
}

/// `pairs` terminal pairs, each with `paths` terminals per side on random spine trees and
/// one connecting path per terminal; partners along the second spine follow `order`.
inline PlantedPairs planted_paired_linkage(int pairs, int paths, std::uint64_t seed,
                                           PartnerOrder order = PartnerOrder::random) {
  if (pairs < 1 || paths < 1) throw ParameterError("planted_paired_linkage: counts must be positive");
  Rng rng(seed);
  detail::PlantBuilder b;
  struct Raw {
    std::vector<int> first, second, first_tree, second_tree;
    std::vector<std::vector<int>> paths;
  };
  std::vector<Raw> raw(static_cast<std::size_t>(pairs));
  std::vector<int> interiors;
  for (Raw& r : raw) {
    r.first = b.spine(rng, paths, r.first_tree);
    r.second = b.spine(rng, paths, r.second_tree);
    std::vector<int> partner(static_cast<std::size_t>(paths));
    for (int i = 0; i < paths; ++i) partner[i] = i;
    if (order == PartnerOrder::random) rng.shuffle(partner);
    if (order == PartnerOrder::reversed) std::reverse(partner.begin(), partner.end());
    for (int i = 0; i < paths; ++i) {
      r.paths.push_back(b.path(rng, r.first[i], r.second[partner[i]]));
      interiors.insert(interiors.end(), r.paths.back().begin() + 1, r.paths.back().end() - 1);
    }
  }
  b.noise(rng, rng.between(0, pairs * paths), interiors);

  const std::vector<int> perm = b.relabel(rng);
  const int n = b.n();
  PlantedPairs out{b.graph(perm), {{}, VertexSet(n)}};
  for (const Raw& r : raw) {
    TerminalPair pair{detail::mapped(n, perm, r.first), detail::mapped(n, perm, r.second),
                      detail::mapped(n, perm, r.first_tree), detail::mapped(n, perm, r.second_tree), {}};
    for (const auto& path : r.paths) pair.paths.push_back(detail::mapped_path(perm, path));
    out.pairs.tree_support |= pair.first_tree;
    out.pairs.tree_support |= pair.second_tree;
    out.pairs.pairs.push_back(std::move(pair));
  }
  return out;
}

/// Balanced bipartite multigraph with sides of size `side` (default 4k²r), every
/// multidegree 2kr² and simple degree < 2kr: a union of d < 2kr random perfect matchings
/// whose multiplicities sum to 2kr².
inline BipartiteMultiGraph planted_bipartite_multigraph(int k, int r, std::uint64_t seed, int side = 0) {
  if (k < 1 || r < 1) throw ParameterError("planted_bipartite_multigraph: k and r must be positive");
  if (side <= 0) side = 4 * k * k * r;
  Rng rng(seed);
  const int total = 2 * k * r * r;
  const int d = rng.between(1, 2 * k * r - 1);
  std::vector<int> weight(static_cast<std::size_t>(d), 1);
  for (int extra = total - d; extra > 0; --extra) ++weight[rng.below(static_cast<std::uint64_t>(d))];
  BipartiteMultiGraph out{MultiGraph(2 * side), side, side};
  for (int w : weight) {
    const std::vector<int> perm = rng.permutation(side);
    for (int i = 0; i < side; ++i) out.graph.add_edge(i, side + perm[i], w);
  }
  return out;
}

}  // namespace epgap
