#pragma once

#include <string>
#include <vector>

#include "epgap/core/multigraph.hpp"
#include "epgap/epd/packing.hpp"
#include "epgap/epd/separation.hpp"
#include "epgap/minors/minor_model.hpp"
#include "epgap/structure/erdos_szekeres.hpp"
#include "epgap/structure/partition.hpp"
#include "epgap/structure/trees.hpp"

// Output checks used by the verification suite. Each one re-derives the claimed property
// from the output alone and names the first clause that fails.
namespace epgap::check {

inline std::string str(int v) { return std::to_string(v); }

inline Verdict low_degree(const Graph& g, int a, const VertexSet& low) {
  const int threshold = 2 * a * degeneracy(g).value;
  for (int v = 0; v < g.n(); ++v) {
    if (low.contains(v) != (g.degree(v) < threshold)) return Verdict::fail("membership", "vertex " + str(v));
  }
  if (static_cast<long>(a) * low.size() <= static_cast<long>(a - 1) * g.n()) {
    return Verdict::fail("count", str(low.size()) + " low-degree vertices of " + str(g.n()) + ", a = " + str(a));
  }
  return Verdict::pass();
}

inline Verdict tree_cut(const Graph& t, const VertexSet& x, int k, const std::vector<VertexSet>& pieces) {
  if (static_cast<int>(pieces.size()) < tree_cut_guarantee(x.size(), k)) {
    return Verdict::fail("count", str(static_cast<int>(pieces.size())) + " pieces, guarantee " +
                                      str(tree_cut_guarantee(x.size(), k)));
  }
  VertexSet seen(t.n());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const VertexSet& p = pieces[i];
    if (p.intersects(seen)) return Verdict::fail("disjointness", "piece " + str(static_cast<int>(i)));
    seen |= p;
    if (p.empty() || !is_connected(t, p)) return Verdict::fail("subtree", "piece " + str(static_cast<int>(i)));
    if ((p & x).size() < k) return Verdict::fail("markers", "piece " + str(static_cast<int>(i)) + " holds fewer than k");
  }
  return Verdict::pass();
}

inline Verdict partition(const Graph& g, int k, const Partition& part) {
  if (static_cast<int>(part.parts.size()) != k) return Verdict::fail("parts", "expected " + str(k) + " parts");
  VertexSet seen(g.n());
  for (const VertexSet& p : part.parts) {
    if (p.intersects(seen)) return Verdict::fail("partition", "parts overlap");
    seen |= p;
  }
  if (seen.size() != g.n()) return Verdict::fail("partition", "parts miss a vertex");
  for (const VertexSet& p : part.parts) {
    bool bad = false;
    int who = -1;
    p.for_each([&](int v) {
      if (!bad && static_cast<long>(k) * (degree_within(g, v, p) + 1) < g.degree(v)) {
        bad = true;
        who = v;
      }
    });
    if (bad) return Verdict::fail("degree", "vertex " + str(who) + " keeps fewer than deg/k - 1 neighbours");
  }
  return Verdict::pass();
}

inline Verdict monotone(const std::vector<int>& seq, int k, int l, const MonotoneSubsequence& m) {
  const int want = m.increasing ? k : l;
  if (static_cast<int>(m.indices.size()) < want || m.values.size() != m.indices.size()) {
    return Verdict::fail("length", "subsequence shorter than " + str(want));
  }
  for (std::size_t i = 0; i < m.indices.size(); ++i) {
    const int at = m.indices[i];
    if (at < 0 || at >= static_cast<int>(seq.size()) || seq[at] != m.values[i]) return Verdict::fail("values", "index mismatch");
    if (i > 0) {
      if (m.indices[i - 1] >= at) return Verdict::fail("order", "indices not increasing");
      if ((m.values[i - 1] < m.values[i]) != m.increasing) return Verdict::fail("monotone", "direction broken");
    }
  }
  return Verdict::pass();
}

inline Verdict long_path(const Graph& t, const std::vector<int>& path, const Partition& parts) {
  VertexSet on(t.n());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (on.contains(path[i])) return Verdict::fail("path", "repeated vertex");
    on.insert(path[i]);
    if (i > 0 && !t.has_edge(path[i - 1], path[i])) return Verdict::fail("path", "consecutive vertices not adjacent");
  }
  if (static_cast<double>(path.size()) - 1.0 < long_path_bound(t) - 1e-9) return Verdict::fail("length", "path below 2 log2(2|X|/3)");
  if (parts.parts.size() != path.size()) return Verdict::fail("parts", "one part per path vertex expected");
  VertexSet seen(t.n());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const VertexSet& p = parts.parts[i];
    if (!p.contains(path[i]) || p.intersects(seen) || !is_connected(t, p)) return Verdict::fail("parts", "part " + str(static_cast<int>(i)));
    seen |= p;
    bool low = false;
    p.for_each([&](int v) { low = low || t.degree(v) <= 2; });
    if (!low) return Verdict::fail("parts", "part without a vertex of degree <= 2");
  }
  if (seen.size() != t.n()) return Verdict::fail("parts", "parts miss a vertex");
  return Verdict::pass();
}

inline Verdict multiedges(const BipartiteMultiGraph& b, int k, int r, const std::vector<Edge>& edges) {
  if (static_cast<int>(edges.size()) < k) return Verdict::fail("count", "fewer than k multiedges");
  VertexSet used(b.graph.n());
  for (const Edge& e : edges) {
    if (b.is_left(e.u) == b.is_left(e.v)) return Verdict::fail("sides", "edge inside one side");
    if (b.graph.multiplicity(e.u, e.v) < r) return Verdict::fail("multiplicity", "multiedge below r");
    if (used.contains(e.u) || used.contains(e.v)) return Verdict::fail("disjointness", "multiedges share a vertex");
    used.insert(e.u);
    used.insert(e.v);
  }
  return Verdict::pass();
}

/// k verified, pairwise disjoint models of `pattern` in `host`.
inline Verdict models(const std::vector<MinorModel>& ms, const Graph& host, const Graph& pattern, int k) {
  if (static_cast<int>(ms.size()) < k) return Verdict::fail("count", str(static_cast<int>(ms.size())) + " models, need " + str(k));
  for (const auto& m : ms) {
    if (!(m.host == host) || !(m.pattern == pattern)) return Verdict::fail("model", "wrong host or pattern");
    if (Verdict v = verify_model(m); !v) return Verdict::fail("model", v.clause + ": " + v.detail);
  }
  if (!pairwise_disjoint(ms)) return Verdict::fail("disjointness", "models overlap");
  return Verdict::pass();
}

inline Verdict cover(const Graph& g, const Graph& h, const VertexSet& c) {
  if (detail::find_masks(g, h, detail::full_mask(g.n()) & ~c.to_mask())) return Verdict::fail("cover", "a model survives");
  return Verdict::pass();
}

/// The three clauses of a balanced separation for pack_h(G) = k, with an independent pack.
inline Verdict balanced(const Graph& g, const Graph& h, int width, const BalancedSeparation& bs, const Limits& limits = {}) {
  if (Verdict v = verify_separation(g, bs.separation); !v) return v;
  if (bs.separation.order() > width + 1) return Verdict::fail("order", str(bs.separation.order()) + " > w + 1");
  const Subgraph left = induced_subgraph(g, bs.separation.a - bs.separation.b);
  const int inside = pack_exact(left.graph, h, limits).value;
  if (3 * inside > 2 * bs.pack) {
    return Verdict::fail("balance", "pack(G[A - B]) = " + str(inside) + " > 2k/3, k = " + str(bs.pack));
  }
  return Verdict::pass();
}

}  // namespace epgap::check
