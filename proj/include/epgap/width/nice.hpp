#pragma once

#include <functional>
#include <string>
#include <vector>

#include "epgap/width/verify.hpp"

namespace epgap {

/// Node kinds, in the usual convention: an introduce node's bag is its child's bag plus
/// one vertex, a forget node's bag is its child's bag minus one vertex.
enum class NodeKind { base, introduce, forget, join };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::base: return "base";
    case NodeKind::introduce: return "introduce";
    case NodeKind::forget: return "forget";
    case NodeKind::join: return "join";
  }
  return "?";
}

struct NiceTreeDecomposition {
  TreeDecomposition decomposition;
  int root = 0;
  std::vector<NodeKind> kind;
  std::vector<int> vertex;  // vertex introduced or forgotten, -1 for base and join nodes
  std::vector<std::vector<int>> children;
  std::vector<int> parent;  // -1 at the root

  int node_count() const { return static_cast<int>(kind.size()); }
  const VertexSet& bag(int t) const { return decomposition.bags[t]; }

  /// Nodes listed children before parents.
  std::vector<int> post_order() const {
    std::vector<int> order;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [t, next] = stack.back();
      if (next < children[t].size()) {
        const int c = children[t][next++];
        stack.push_back({c, 0});
      } else {
        order.push_back(t);
        stack.pop_back();
      }
    }
    return order;
  }
};

namespace detail {

class NiceBuilder {
 public:
  explicit NiceBuilder(int n) : n_(n) {}

  int add(NodeKind k, VertexSet bag, int v, std::vector<int> kids) {
    const int id = static_cast<int>(kinds_.size());
    kinds_.push_back(k);
    bags_.push_back(std::move(bag));
    vertex_.push_back(v);
    for (int c : kids) parent_[c] = id;
    children_.push_back(std::move(kids));
    parent_.push_back(-1);
    return id;
  }

  /// Forgets target-absent vertices, then introduces missing ones, in ascending order.
  int chain(int node, const VertexSet& target) {
    VertexSet cur = bags_[node];
    for (int v : (cur - target).members()) {
      cur.erase(v);
      node = add(NodeKind::forget, cur, v, {node});
    }
    for (int v : (target - cur).members()) {
      cur.insert(v);
      node = add(NodeKind::introduce, cur, v, {node});
    }
    return node;
  }

  NiceTreeDecomposition finish(int root) {
    NiceTreeDecomposition out;
    std::vector<Edge> edges;
    for (int t = 0; t < static_cast<int>(kinds_.size()); ++t) {
      for (int c : children_[t]) edges.emplace_back(t, c);
    }
    out.decomposition.tree = Graph(static_cast<int>(kinds_.size()), edges);
    out.decomposition.width = TreeDecomposition::width_of(bags_);
    out.decomposition.bags = std::move(bags_);
    out.root = root;
    out.kind = std::move(kinds_);
    out.vertex = std::move(vertex_);
    out.children = std::move(children_);
    out.parent = std::move(parent_);
    return out;
  }

  int n() const { return n_; }

 private:
  int n_;
  std::vector<NodeKind> kinds_;
  std::vector<VertexSet> bags_;
  std::vector<int> vertex_;
  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
};

}  // namespace detail

/// Converts a valid tree decomposition into nice form of the same width: root the
/// tree at node 0, replace every tree edge by a forget-then-introduce chain, split nodes
/// with several children into binary join trees, start every leaf from an empty base bag
/// and forget the root bag down to an empty root.
inline NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  if (Verdict v = verify_decomposition(g, td); !v) {
    throw ValidationError("make_nice: invalid decomposition (" + v.clause + ": " + v.detail + ")");
  }
  detail::NiceBuilder b(g.n());
  const Graph& tree = td.tree;
  std::function<int(int, int)> build = [&](int t, int from) -> int {
    std::vector<int> tops;
    for (int c : tree.neighbors(t)) {
      if (c == from) continue;
      tops.push_back(b.chain(build(c, t), td.bags[t]));
    }
    if (tops.empty()) return b.chain(b.add(NodeKind::base, VertexSet(g.n()), -1, {}), td.bags[t]);
    int node = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) node = b.add(NodeKind::join, td.bags[t], -1, {node, tops[i]});
    return node;
  };
  int top = build(0, -1);
  top = b.chain(top, VertexSet(g.n()));
  return b.finish(top);
}

/// Checks the nice-form clauses: valid decomposition, degree <= 3, empty root bag, and
/// each node's kind consistent with its children. Clause names: "decomposition", "root",
/// "degree", "base", "introduce", "forget", "join".
inline Verdict verify_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  if (Verdict v = verify_decomposition(g, ntd.decomposition); !v) return Verdict::fail("decomposition", v.clause + ": " + v.detail);
  const int nodes = ntd.node_count();
  if (static_cast<int>(ntd.children.size()) != nodes || static_cast<int>(ntd.vertex.size()) != nodes ||
      static_cast<int>(ntd.parent.size()) != nodes || ntd.decomposition.node_count() != nodes) {
    return Verdict::fail("decomposition", "per-node arrays disagree in length");
  }
  if (ntd.root < 0 || ntd.root >= nodes || ntd.parent[ntd.root] != -1) return Verdict::fail("root", "bad root index");
  if (!ntd.bag(ntd.root).empty()) return Verdict::fail("root", "root bag " + ntd.bag(ntd.root).to_string() + " not empty");
  for (int t = 0; t < nodes; ++t) {
    const std::string where = "node " + std::to_string(t);
    if (ntd.decomposition.tree.degree(t) > 3) return Verdict::fail("degree", where + " has degree > 3");
    for (int c : ntd.children[t]) {
      if (ntd.parent[c] != t || !ntd.decomposition.tree.has_edge(t, c)) {
        return Verdict::fail("decomposition", where + ": child links inconsistent with the tree");
      }
    }
    const auto& kids = ntd.children[t];
    const VertexSet& bag = ntd.bag(t);
    switch (ntd.kind[t]) {
      case NodeKind::base:
        if (!kids.empty() || !bag.empty() || (t == ntd.root && nodes > 1)) {
          return Verdict::fail("base", where + " is not an empty non-root leaf");
        }
        break;
      case NodeKind::introduce: {
        const int v = ntd.vertex[t];
        if (kids.size() != 1 || v < 0 || v >= g.n() || ntd.bag(kids[0]).contains(v) || !bag.contains(v)) {
          return Verdict::fail("introduce", where);
        }
        VertexSet expect = ntd.bag(kids[0]);
        expect.insert(v);
        if (!(expect == bag)) return Verdict::fail("introduce", where + ": bag is not child bag plus vertex");
        break;
      }
      case NodeKind::forget: {
        const int v = ntd.vertex[t];
        if (kids.size() != 1 || v < 0 || v >= g.n() || !ntd.bag(kids[0]).contains(v) || bag.contains(v)) {
          return Verdict::fail("forget", where);
        }
        VertexSet expect = ntd.bag(kids[0]);
        expect.erase(v);
        if (!(expect == bag)) return Verdict::fail("forget", where + ": bag is not child bag minus vertex");
        break;
      }
      case NodeKind::join:
        if (kids.size() != 2 || !(ntd.bag(kids[0]) == bag) || !(ntd.bag(kids[1]) == bag)) {
          return Verdict::fail("join", where);
        }
        break;
    }
  }
  return Verdict::pass();
}

inline int count_kind(const NiceTreeDecomposition& ntd, NodeKind k) {
  int c = 0;
  for (NodeKind x : ntd.kind) c += x == k ? 1 : 0;
  return c;
}

}  // namespace epgap
