#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "epgap/core/degeneracy.hpp"
#include "epgap/core/multigraph.hpp"
#include "epgap/structure/degree_lemmas.hpp"
#include "epgap/structure/trees.hpp"
#include "epgap/width/flow.hpp"
#include "epgap/width/mesh.hpp"

namespace epgap {

/// Terminal sets X_1..X_2q, each spanned by a connected vertex set T_i inside the tree
/// support A, plus disjoint paths of length >= 2 from the first half of the terminal sets
/// to the second half whose interiors avoid every X_l and A.
struct LinkageWitness {
  std::vector<VertexSet> terminal_sets;
  std::vector<VertexSet> trees;
  std::vector<std::vector<int>> paths;
  VertexSet tree_support;
};

struct TerminalPair {
  VertexSet first;
  VertexSet second;
  VertexSet first_tree;
  VertexSet second_tree;
  std::vector<std::vector<int>> paths;  // each runs from `first` to `second`
};

/// p pairs of terminal sets, each pair joined by its own bundle of disjoint paths.
struct PairedLinkage {
  std::vector<TerminalPair> pairs;
  VertexSet tree_support;
};

namespace detail {

inline Verdict check_path_shape(const Graph& g, const std::vector<int>& path, std::size_t index) {
  const std::string where = "path " + std::to_string(index);
  if (path.size() < 3) return Verdict::fail("path shape", where + " has length < 2");
  VertexSet seen(g.n());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= g.n() || seen.contains(path[i])) return Verdict::fail("path shape", where + " repeats a vertex");
    seen.insert(path[i]);
    if (i > 0 && !g.has_edge(path[i - 1], path[i])) return Verdict::fail("path shape", where + " uses a non-edge");
  }
  return Verdict::pass();
}

inline Verdict check_trees(const Graph& g, const std::vector<VertexSet>& sets, const std::vector<VertexSet>& trees,
                           const VertexSet& support) {
  if (sets.size() != trees.size()) return Verdict::fail("tree connectivity", "one tree per terminal set expected");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].universe() != g.n() || trees[i].universe() != g.n()) return Verdict::fail("terminal sizes", "wrong universe");
    if (!sets[i].is_subset_of(trees[i]) || !trees[i].is_subset_of(support) || !is_connected(g, trees[i])) {
      return Verdict::fail("tree connectivity", "terminal set " + std::to_string(i) + " is not spanned by a connected tree in A");
    }
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    for (std::size_t j = i + 1; j < trees.size(); ++j) {
      if (trees[i].intersects(trees[j])) {
        return Verdict::fail("tree disjointness", "trees " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  return Verdict::pass();
}

inline Verdict check_paths(const Graph& g, const std::vector<std::vector<int>>& paths, const VertexSet& forbidden_interior) {
  VertexSet used(g.n());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (Verdict v = check_path_shape(g, paths[i], i); !v) return v;
    for (std::size_t j = 1; j + 1 < paths[i].size(); ++j) {
      if (forbidden_interior.contains(paths[i][j])) {
        return Verdict::fail("path interior", "path " + std::to_string(i) + " passes through a terminal set or A");
      }
    }
    for (int v : paths[i]) {
      if (used.contains(v)) return Verdict::fail("path disjointness", "paths share vertex " + std::to_string(v));
      used.insert(v);
    }
  }
  return Verdict::pass();
}

inline int owner_of(const std::vector<VertexSet>& sets, int v) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].contains(v)) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace detail

/// Clauses: "terminal sizes", "tree connectivity", "tree disjointness", "path shape",
/// "path ends", "path interior", "path disjointness".
inline Verdict verify_linkage(const Graph& g, const LinkageWitness& lw) {
  const std::size_t sets = lw.terminal_sets.size();
  if (sets == 0 || sets % 2 != 0) return Verdict::fail("terminal sizes", "need an even, positive number of terminal sets");
  for (const auto& x : lw.terminal_sets) {
    if (x.universe() != g.n() || x.size() != lw.terminal_sets[0].size() || x.empty()) {
      return Verdict::fail("terminal sizes", "terminal sets differ in size");
    }
  }
  if (lw.tree_support.universe() != g.n()) return Verdict::fail("tree connectivity", "A over the wrong universe");
  if (Verdict v = detail::check_trees(g, lw.terminal_sets, lw.trees, lw.tree_support); !v) return v;
  VertexSet forbidden = lw.tree_support;
  for (const auto& x : lw.terminal_sets) forbidden |= x;
  for (std::size_t i = 0; i < lw.paths.size(); ++i) {
    if (Verdict v = detail::check_path_shape(g, lw.paths[i], i); !v) return v;
    const int a = detail::owner_of(lw.terminal_sets, lw.paths[i].front());
    const int b = detail::owner_of(lw.terminal_sets, lw.paths[i].back());
    const int half = static_cast<int>(sets / 2);
    const bool ok = a >= 0 && b >= 0 && ((a < half) != (b < half));
    if (!ok) return Verdict::fail("path ends", "path " + std::to_string(i) + " does not join the two halves");
  }
  return detail::check_paths(g, lw.paths, forbidden);
}

/// Clauses as for linkages; "path ends" requires both ends inside the path's own pair.
inline Verdict verify_paired_linkage(const Graph& g, const PairedLinkage& pl) {
  std::vector<VertexSet> sets;
  std::vector<VertexSet> trees;
  std::vector<std::vector<int>> paths;
  for (const auto& pair : pl.pairs) {
    if (pair.first.size() != pair.second.size() || pair.first.empty()) {
      return Verdict::fail("terminal sizes", "pair with unequal or empty terminal sets");
    }
    sets.push_back(pair.first);
    sets.push_back(pair.second);
    trees.push_back(pair.first_tree);
    trees.push_back(pair.second_tree);
  }
  if (pl.tree_support.universe() != g.n()) return Verdict::fail("tree connectivity", "A over the wrong universe");
  if (Verdict v = detail::check_trees(g, sets, trees, pl.tree_support); !v) return v;
  VertexSet forbidden = pl.tree_support;
  for (const auto& x : sets) forbidden |= x;
  for (std::size_t p = 0; p < pl.pairs.size(); ++p) {
    const auto& pair = pl.pairs[p];
    for (const auto& path : pair.paths) {
      if (path.empty()) return Verdict::fail("path shape", "empty path");
      const bool forward = pair.first.contains(path.front()) && pair.second.contains(path.back());
      const bool backward = pair.second.contains(path.front()) && pair.first.contains(path.back());
      if (!forward && !backward) return Verdict::fail("path ends", "a path of pair " + std::to_string(p) + " leaves its pair");
      paths.push_back(path);
    }
  }
  return detail::check_paths(g, paths, forbidden);
}

/// From a verified (pq)-mesh of order (2p-1)(2q+1): cut the mesh tree into
/// floor(|X| / (2p-1)) - 1 = 2q subtrees with >= p boundary vertices each, keep p of them as X_i, and route pq disjoint paths
/// from the first q sets to the last q through B - A by max-flow.
inline LinkageWitness mesh_to_linkage(const Graph& g, const MeshWitness& w, int p, int q, const Limits& limits = {}) {
  if (p < 1 || q < 1) throw ParameterError("mesh_to_linkage: p and q must be positive");
  if (w.order != (2 * p - 1) * (2 * q + 1)) throw PreconditionError("mesh_to_linkage: mesh order is not (2p-1)(2q+1)");
  if (w.connectivity < p * q) throw PreconditionError("mesh_to_linkage: mesh connectivity below pq");
  if (w.order <= limits.verify_mesh_order && w.connectivity <= limits.verify_mesh_connectivity) {
    if (Verdict v = verify_mesh(g, w, limits); !v) throw WitnessError("mesh_to_linkage: mesh fails " + v.clause);
  }
  const VertexSet x = w.boundary();
  std::vector<VertexSet> pieces;
  if (p == 1) {
    x.for_each([&](int v) { pieces.push_back(VertexSet(g.n(), {v})); });
  } else {
    // The tree as a graph on its own vertices.
    const std::vector<int> ids = w.tree_vertices.members();
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : w.tree_edges) edges.emplace_back(local[e.u], local[e.v]);
    const Graph tree(static_cast<int>(ids.size()), edges);
    VertexSet marks(tree.n());
    x.for_each([&](int v) { marks.insert(local[v]); });
    for (const VertexSet& piece : tree_cut(tree, marks, p)) {
      VertexSet lifted(g.n());
      piece.for_each([&](int v) { lifted.insert(ids[v]); });
      pieces.push_back(std::move(lifted));
    }
  }
  if (static_cast<int>(pieces.size()) < 2 * q) throw WitnessError("mesh_to_linkage: tree cut produced too few subtrees");
  LinkageWitness out;
  out.tree_support = w.a;
  for (int i = 0; i < 2 * q; ++i) {
    VertexSet xi(g.n());
    for (int v : (pieces[i] & x).members()) {
      if (xi.size() < p) xi.insert(v);
    }
    out.terminal_sets.push_back(std::move(xi));
    out.trees.push_back(pieces[i]);
  }
  VertexSet z1(g.n());
  VertexSet z2(g.n());
  for (int i = 0; i < q; ++i) z1 |= out.terminal_sets[i];
  for (int i = q; i < 2 * q; ++i) z2 |= out.terminal_sets[i];
  const EdgeFilter outside_x = [&](int u, int v) { return !(x.contains(u) && x.contains(v)); };
  out.paths = disjoint_paths(g, z1, z2, w.b - w.a, outside_x, p * q);
  if (static_cast<int>(out.paths.size()) < p * q) throw WitnessError("mesh_to_linkage: routing found fewer than pq paths");
  if (Verdict v = verify_linkage(g, out); !v) throw WitnessError("mesh_to_linkage: " + v.clause + ": " + v.detail);
  return out;
}

/// The auxiliary bipartite multigraph of a linkage: one vertex per terminal set, one
/// edge per path between the sets holding its ends (first half on the left).
inline BipartiteMultiGraph linkage_multigraph(const LinkageWitness& lw) {
  const int sets = static_cast<int>(lw.terminal_sets.size());
  BipartiteMultiGraph b{MultiGraph(sets), sets / 2, sets - sets / 2};
  for (const auto& path : lw.paths) {
    const int a = detail::owner_of(lw.terminal_sets, path.front());
    const int c = detail::owner_of(lw.terminal_sets, path.back());
    b.graph.add_edge(a, c);
  }
  return b;
}

/// Selects p disjoint pairs of terminal sets each joined by q paths. Expects 8p²q sets of
/// size q and 4p²q² paths, and an auxiliary multigraph of degeneracy < 2pq. Pairs are
/// read off the selected heavy multiedges: (X_i, X_j) for a multiedge i-j.
inline PairedLinkage linkage_to_pairs(const Graph& g, const LinkageWitness& lw, int p, int q) {
  if (p < 1 || q < 1) throw ParameterError("linkage_to_pairs: p and q must be positive");
  if (Verdict v = verify_linkage(g, lw); !v) throw PreconditionError(v.clause + ": " + v.detail);
  const long sets = 8L * p * p * q;
  if (static_cast<long>(lw.terminal_sets.size()) != sets) throw PreconditionError("linkage_to_pairs: expected 8p²q terminal sets");
  if (lw.terminal_sets[0].size() != q) throw PreconditionError("linkage_to_pairs: terminal sets must have size q");
  if (static_cast<long>(lw.paths.size()) != 4L * p * p * q * q) throw PreconditionError("linkage_to_pairs: expected 4p²q² paths");
  const BipartiteMultiGraph aux = linkage_multigraph(lw);
  if (degeneracy(aux.graph.simple()).value >= 2 * p * q) throw PreconditionError("auxiliary degeneracy: dgn >= 2pq");
  std::vector<std::vector<int>> heavy(static_cast<std::size_t>(aux.left));
  for (const auto& [e, mult] : aux.graph.multiedges()) {
    if (mult >= q) heavy[e.u].push_back(e.v - aux.left);
  }
  const std::vector<int> match = detail::max_bipartite_matching(heavy, aux.right);
  PairedLinkage out;
  out.tree_support = lw.tree_support;
  for (int i = 0; i < aux.left && static_cast<int>(out.pairs.size()) < p; ++i) {
    if (match[i] < 0) continue;
    const int j = aux.left + match[i];
    TerminalPair pair{lw.terminal_sets[i], lw.terminal_sets[j], lw.trees[i], lw.trees[j], {}};
    for (const auto& path : lw.paths) {
      if (static_cast<int>(pair.paths.size()) == q) break;
      const int a = detail::owner_of(lw.terminal_sets, path.front());
      const int b = detail::owner_of(lw.terminal_sets, path.back());
      if (a == i && b == j) pair.paths.push_back(path);
      if (a == j && b == i) pair.paths.emplace_back(path.rbegin(), path.rend());
    }
    out.pairs.push_back(std::move(pair));
  }
  if (static_cast<int>(out.pairs.size()) < p) throw PreconditionError("linkage_to_pairs: fewer than p disjoint heavy pairs");
  if (Verdict v = verify_paired_linkage(g, out); !v) throw WitnessError("linkage_to_pairs: " + v.clause);
  return out;
}

}  // namespace epgap
