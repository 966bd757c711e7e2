#include <gtest/gtest.h>

#include "epgap/core/contraction.hpp"
#include "epgap/core/generators.hpp"
#include "epgap/core/graph_io.hpp"
#include "epgap/minors/search.hpp"
#include "epgap/structure/planted.hpp"
#include "epgap/width/mesh.hpp"
#include "epgap/width/nice.hpp"
#include "epgap/width/pathwidth.hpp"
#include "epgap/width/treewidth.hpp"
#include "epgap/width/verify.hpp"
#include "oracles.hpp"

using namespace epgap;

TEST(Treewidth, Examples) {
  EXPECT_EQ(treewidth_exact(complete_graph(6)).width, 5);
  EXPECT_EQ(treewidth_exact(cycle_graph(5)).width, 2);
  EXPECT_EQ(treewidth_exact(xi_graph(5)).width, 2);
  EXPECT_EQ(treewidth_exact(grid_graph(4, 4)).width, 4);
  EXPECT_EQ(treewidth_exact(path_graph(1)).width, 0);
  EXPECT_EQ(treewidth_exact(Graph(3, {})).width, 0);
  EXPECT_THROW(treewidth_exact(path_graph(21)), SizeLimitError);
}

TEST(Treewidth, AgreesWithAllOrderings) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_gnp(3 + static_cast<int>(seed % 6), 0.5, seed);
    const WidthResult r = treewidth_exact(g);
    ASSERT_EQ(r.width, oracle::treewidth(g)) << write_graph6(g);
    EXPECT_TRUE(verify_decomposition(g, r.decomposition)) << write_graph6(g);
    EXPECT_EQ(r.decomposition.width, r.width);
    EXPECT_EQ(oracle::treewidth_by_subsets(g), oracle::treewidth(g));
  }
}

TEST(Treewidth, AgreesWithSubsetOracleOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = random_gnp(10 + static_cast<int>(seed % 5), 0.35, seed + 500);
    EXPECT_EQ(treewidth_exact(g).width, oracle::treewidth_by_subsets(g)) << write_graph6(g);
  }
  for (int r = 2; r <= 5; ++r) EXPECT_EQ(oracle::treewidth_by_subsets(xi_graph(r)), 2);
}

TEST(Treewidth, CertificatesOnLargerGraphs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnp(14 + static_cast<int>(seed % 5), 0.3, seed + 500);
    const WidthResult r = treewidth_exact(g);
    const Verdict v = verify_decomposition(g, r.decomposition);
    EXPECT_TRUE(v) << v.clause << " " << v.detail;
    EXPECT_EQ(r.decomposition.width, r.width);
    EXPECT_LE(degeneracy(g).value, r.width);
  }
}

TEST(Treewidth, MinorMonotone) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_gnp(6 + static_cast<int>(seed % 5), 0.45, seed + 90);
    if (g.m() == 0) continue;
    const Edge e = g.edges()[seed % g.m()];
    const Graph h = contract_edge(g, e).graph;
    EXPECT_LE(treewidth_exact(h).width, treewidth_exact(g).width);
  }
}

TEST(Pathwidth, Examples) {
  EXPECT_EQ(pathwidth_exact(path_graph(9)).width, 1);
  EXPECT_EQ(pathwidth_exact(star_graph(3)).width, 1);
  EXPECT_EQ(pathwidth_exact(xi_graph(4)).width, 2);
  EXPECT_EQ(pathwidth_exact(complete_ternary_tree(2)).width, 2);
  EXPECT_THROW(pathwidth_exact(path_graph(17)), SizeLimitError);
}

TEST(Pathwidth, AgreesWithAllLayouts) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_gnp(2 + static_cast<int>(seed % 7), 0.4, seed + 7);
    const WidthResult r = pathwidth_exact(g);
    ASSERT_EQ(r.width, oracle::pathwidth(g)) << write_graph6(g);
    EXPECT_TRUE(verify_decomposition(g, r.decomposition));
    EXPECT_TRUE(is_path_decomposition(r.decomposition));
    EXPECT_GE(r.width, treewidth_exact(g).width);
  }
}

TEST(VerifyDecomposition, Clauses) {
  const Graph c4 = cycle_graph(4);
  const TreeDecomposition whole = TreeDecomposition::path({c4.all()});
  EXPECT_TRUE(verify_decomposition(c4, whole));
  EXPECT_EQ(whole.width, 3);

  TreeDecomposition missing = TreeDecomposition::path({VertexSet(4, {0, 1, 2}), VertexSet(4, {2, 3})});
  Verdict v = verify_decomposition(c4, missing);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "edge coverage");

  const Graph p3 = path_graph(3);
  TreeDecomposition split = TreeDecomposition::path({VertexSet(3, {0, 1}), VertexSet(3, {1, 2}), VertexSet(3, {0})});
  v = verify_decomposition(p3, split);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.clause, "connectivity of occurrence");

  TreeDecomposition uncovered = TreeDecomposition::path({VertexSet(3, {0, 1})});
  EXPECT_EQ(verify_decomposition(p3, uncovered).clause, "vertex coverage");

  TreeDecomposition lying = TreeDecomposition::path({VertexSet(3, {0, 1}), VertexSet(3, {1, 2})});
  lying.width = 2;
  EXPECT_EQ(verify_decomposition(p3, lying).clause, "width");
}

TEST(NiceDecomposition, SingleVertex) {
  const Graph k1(1, {});
  const NiceTreeDecomposition nice = make_nice(k1, TreeDecomposition::path({VertexSet(1, {0})}));
  EXPECT_TRUE(verify_nice(k1, nice));
  EXPECT_TRUE(nice.bag(nice.root).empty());
  EXPECT_EQ(nice.kind[nice.root], NodeKind::forget);
  EXPECT_EQ(count_kind(nice, NodeKind::introduce), 1);
  EXPECT_EQ(count_kind(nice, NodeKind::base), 1);
  EXPECT_EQ(nice.decomposition.width, 0);
}

TEST(NiceDecomposition, PreservesWidth) {
  const Graph c4 = cycle_graph(4);
  const NiceTreeDecomposition nice = make_nice(c4, treewidth_exact(c4).decomposition);
  EXPECT_TRUE(verify_nice(c4, nice));
  EXPECT_EQ(nice.decomposition.width, 2);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_gnp(4 + static_cast<int>(seed % 9), 0.35, seed + 300);
    const WidthResult tw = treewidth_exact(g);
    const NiceTreeDecomposition n = make_nice(g, tw.decomposition);
    const Verdict v = verify_nice(g, n);
    ASSERT_TRUE(v) << v.clause << " " << v.detail << " " << write_graph6(g);
    EXPECT_EQ(n.decomposition.width, tw.width);
    EXPECT_LE(n.node_count(), 4 * (tw.width + 2) * std::max(1, g.n()));
    for (int t = 0; t < n.node_count(); ++t) {
      if (n.kind[t] == NodeKind::base) {
        EXPECT_TRUE(n.bag(t).empty());
      }
    }
  }
}

TEST(NiceDecomposition, PathInputHasNoJoins) {
  const Graph g = xi_graph(4);
  const NiceTreeDecomposition nice = make_nice(g, pathwidth_exact(g).decomposition);
  EXPECT_TRUE(verify_nice(g, nice));
  EXPECT_EQ(count_kind(nice, NodeKind::join), 0);
}

TEST(NiceDecomposition, RejectsInvalidInput) {
  const Graph c4 = cycle_graph(4);
  EXPECT_THROW(make_nice(c4, TreeDecomposition::path({VertexSet(4, {0, 1, 2})})), ValidationError);
}

namespace {

std::vector<char> flags_of(const VertexSet& s) {
  std::vector<char> out(static_cast<std::size_t>(s.universe()), 0);
  s.for_each([&](int v) { out[v] = 1; });
  return out;
}

}  // namespace

TEST(Mesh, PlantedWitnessesVerify) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int s = 3 + static_cast<int>(seed % 5);
    const int k = 1 + static_cast<int>(seed % 3);
    const PlantedMesh pm = planted_mesh(s, k, seed);
    const Verdict v = verify_mesh(pm.graph, pm.mesh);
    ASSERT_TRUE(v) << v.clause << " " << v.detail;
    if (pm.graph.n() <= 22) {
      EXPECT_TRUE(oracle::externally_connected(pm.graph, pm.mesh.boundary().members(), flags_of(pm.mesh.b), k));
    }
  }
}

TEST(Mesh, ClauseViolations) {
  PlantedMesh pm = planted_mesh(4, 2, 11);
  MeshWitness wrong_order = pm.mesh;
  wrong_order.order = 5;
  EXPECT_EQ(verify_mesh(pm.graph, wrong_order).clause, "order");

  MeshWitness uncovered = pm.mesh;
  uncovered.b.erase((pm.graph.all() - pm.mesh.a).first());
  EXPECT_EQ(verify_mesh(pm.graph, uncovered).clause, "cover");

  // Two stars whose leaves are tied by disjoint paths, then one tie removed.
  //   tree: centre 0 with leaves 1, 2, 3; B side: 1-4-5, 2-6-7, 3-8-9 and 5, 7, 9 in a triangle.
  std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {4, 5}, {2, 6}, {6, 7}, {3, 8}, {8, 9}, {5, 7}, {7, 9}, {5, 9}};
  const Graph g(10, edges);
  MeshWitness w{VertexSet(10, {0, 1, 2, 3}), VertexSet(10, {1, 2, 3, 4, 5, 6, 7, 8, 9}), VertexSet(10, {0, 1, 2, 3}),
                {{0, 1}, {0, 2}, {0, 3}}, 3, 1};
  EXPECT_TRUE(verify_mesh(g, w));
  EXPECT_TRUE(oracle::externally_connected(g, {1, 2, 3}, flags_of(w.b), 1));
  std::erase(edges, Edge(6, 7));
  const Graph cut(10, edges);
  const Verdict v = verify_mesh(cut, w);
  EXPECT_EQ(v.clause, "external connectivity");
  EXPECT_FALSE(oracle::externally_connected(cut, {1, 2, 3}, flags_of(w.b), 1));

  MeshWitness no_leaf = w;
  no_leaf.a = VertexSet(10, {0, 1, 2, 3, 4});
  no_leaf.tree_vertices = no_leaf.a;
  no_leaf.tree_edges.emplace_back(1, 4);
  no_leaf.b = VertexSet(10, {1, 2, 3, 5, 6, 7, 8, 9});
  no_leaf.b.insert(4);
  EXPECT_FALSE(verify_mesh(g, no_leaf));
  EXPECT_THROW(verify_mesh(g, MeshWitness{w.a, w.b, w.tree_vertices, w.tree_edges, 11, 1}), SizeLimitError);
}

TEST(Mesh, VerifierAgreesWithPathSearch) {
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_gnp(8, 0.35, seed + 40);
    const std::vector<int> x{0, 1, 2, 3};
    const VertexSet b = g.all();
    const int k = 1 + static_cast<int>(seed % 2);
    const bool expected = oracle::externally_connected(g, x, flags_of(b), k);
    EXPECT_EQ(!detail::external_connectivity_violation(g, VertexSet::of(8, x), b, k), expected) << write_graph6(g);
    failures += expected ? 0 : 1;
  }
  EXPECT_GT(failures, 0);
}

TEST(Mesh, FindExamples) {
  auto k5 = find_mesh(complete_graph(5), 1, 2);
  ASSERT_TRUE(k5.has_value());
  EXPECT_TRUE(verify_mesh(complete_graph(5), *k5));
  EXPECT_FALSE(find_mesh(Graph(6, {}), 1, 2).has_value());
  EXPECT_THROW(find_mesh(complete_graph(13), 1, 2), SizeLimitError);
}

TEST(Mesh, HighTreewidthForcesMesh) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = random_gnp(5 + static_cast<int>(seed % 4), 0.6, seed + 1000);
    const int tw = treewidth_exact(g).width;
    for (int p = 1; p <= 3; ++p) {
      for (int q = 1; q <= p; ++q) {
        if (tw < p + q - 1) continue;
        ++checked;
        auto w = find_mesh(g, q, p);
        ASSERT_TRUE(w.has_value()) << write_graph6(g) << " p=" << p << " q=" << q;
        EXPECT_TRUE(verify_mesh(g, *w));
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Mesh, NoK2rMinorBoundsTreewidth) {
  // The bound tw < 2r - 2 fails for small graphs: K_3 has no K_{2,2} minor and
  // treewidth 2. The bound that holds is tw <= 2r - 2.
  EXPECT_FALSE(is_minor(complete_graph(3), complete_bipartite(2, 2)));
  EXPECT_EQ(treewidth_exact(complete_graph(3)).width, 2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_gnp(6 + static_cast<int>(seed % 7), 0.3, seed + 77);
    for (int r = 2; r <= 3; ++r) {
      if (!is_minor(g, complete_bipartite(2, r))) {
        EXPECT_LE(treewidth_exact(g).width, 2 * r - 2) << write_graph6(g);
      }
    }
  }
}
