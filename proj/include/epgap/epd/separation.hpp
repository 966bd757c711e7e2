#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "epgap/epd/packing.hpp"
#include "epgap/width/nice.hpp"

namespace epgap {

struct Separation {
  VertexSet a;
  VertexSet b;

  int order() const { return (a & b).size(); }
};

/// "cover": A ∪ B = V(G); "separation": no edge between A - B and B - A.
inline Verdict verify_separation(const Graph& g, const Separation& s) {
  if (s.a.universe() != g.n() || s.b.universe() != g.n()) return Verdict::fail("cover", "sets over the wrong universe");
  if ((s.a | s.b).size() != g.n()) return Verdict::fail("cover", "A ∪ B misses vertices");
  if (has_edge_between(g, s.a - s.b, s.b - s.a)) return Verdict::fail("separation", "edge between A - B and B - A");
  return Verdict::pass();
}

struct BalancedSeparation {
  Separation separation;
  int pack = 0;  // pack_h(G)
  bool pack_zero = false;
  int split_node = -1;
  NodeKind split_kind = NodeKind::base;
  std::vector<int> p;  // p(t) = pack_h(G_t) per decomposition node
};

namespace detail {

/// Raised when the node rules for p(t) or the existence/uniqueness of the split node fail.
struct SeparationInvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

/// G_t = G[(union of the bags below t, t included) - V_t] for every node.
inline std::vector<VertexSet> below_sets(const NiceTreeDecomposition& ntd, int n) {
  std::vector<VertexSet> below(static_cast<std::size_t>(ntd.node_count()), VertexSet(n));
  std::vector<VertexSet> out(below.size(), VertexSet(n));
  for (int t : ntd.post_order()) {
    below[t] = ntd.bag(t);
    for (int c : ntd.children[t]) below[t] |= below[c];
    out[t] = below[t] - ntd.bag(t);
  }
  return out;
}

inline BalancedSeparation balanced_separation_with(const Graph& g, const NiceTreeDecomposition& ntd,
                                                   const std::function<int(const VertexSet&)>& pack_of) {
  const int n = g.n();
  const std::vector<VertexSet> gt = below_sets(ntd, n);
  BalancedSeparation out;
  out.p.assign(static_cast<std::size_t>(ntd.node_count()), 0);
  for (int t : ntd.post_order()) {
    const int value = pack_of(gt[t]);
    out.p[t] = value;
    const auto& kids = ntd.children[t];
    auto fail = [&](const std::string& rule) {
      throw SeparationInvariantError("p(t) rule violated at " + std::string(to_string(ntd.kind[t])) + " node " +
                                     std::to_string(t) + ": " + rule);
    };
    switch (ntd.kind[t]) {
      case NodeKind::base:
        if (value != 0) fail("base node with p > 0");
        break;
      case NodeKind::introduce:
        if (value != out.p[kids[0]]) fail("introduce changes p");
        break;
      case NodeKind::forget:
        if (value != out.p[kids[0]] && value != out.p[kids[0]] + 1) fail("forget changes p by more than one");
        break;
      case NodeKind::join:
        if (value != out.p[kids[0]] + out.p[kids[1]]) fail("join is not additive");
        break;
    }
  }
  const int k = out.p[ntd.root];
  out.pack = k;
  if (k == 0) {
    out.pack_zero = true;
    out.separation = {g.all(), g.all()};
    return out;
  }
  for (int t = 0; t < ntd.node_count(); ++t) {
    if (3 * out.p[t] <= 2 * k) continue;
    bool children_small = true;
    for (int c : ntd.children[t]) children_small = children_small && 3 * out.p[c] <= 2 * k;
    if (!children_small) continue;
    if (out.split_node >= 0) throw SeparationInvariantError("split node is not unique");
    out.split_node = t;
  }
  if (out.split_node < 0) throw SeparationInvariantError("no split node");
  const int t = out.split_node;
  out.split_kind = ntd.kind[t];
  int side = -1;
  if (out.split_kind == NodeKind::forget) {
    side = ntd.children[t][0];
  } else if (out.split_kind == NodeKind::join) {
    side = 3 * out.p[ntd.children[t][0]] >= k ? ntd.children[t][0] : ntd.children[t][1];
  } else {
    throw SeparationInvariantError("split node is neither forget nor join");
  }
  // For a forget node the child's part is cut off: the node's own part would still hold
  // more than 2k/3 disjoint models.
  out.separation.a = gt[side] | ntd.bag(side);
  out.separation.b = g.all() - gt[side];
  return out;
}

}  // namespace detail

/// Separation (A, B) of order <= w + 1 with pack_h(G[A - B]) <= floor(2k/3), k = pack_h(G),
/// read off the node t of a nice decomposition where p(t) > 2k/3 while p stays <= 2k/3 on
/// its children. At a forget node A - B is the child's G_t'; at a join node the child
/// with p >= k/3. With k = 0 the trivial separation (V, V) is returned and flagged.
inline BalancedSeparation balanced_separation(const Graph& g, const Graph& h, const NiceTreeDecomposition& ntd,
                                              const Limits& limits = {}) {
  if (!is_connected(h)) throw PreconditionError("balanced_separation: pattern must be connected");
  if (Verdict v = verify_nice(g, ntd); !v) throw ValidationError("balanced_separation: " + v.clause + ": " + v.detail);
  PackingOracle oracle(g, h, limits);
  return detail::balanced_separation_with(g, ntd, [&](const VertexSet& s) { return oracle.pack(s); });
}

}  // namespace epgap
