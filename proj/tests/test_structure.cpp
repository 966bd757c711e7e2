#include <gtest/gtest.h>

#include <cmath>

#include "epgap/core/generators.hpp"
#include "epgap/core/graph_io.hpp"
#include "epgap/structure/degree_lemmas.hpp"
#include "epgap/structure/erdos_szekeres.hpp"
#include "epgap/structure/extraction.hpp"
#include "epgap/structure/linkage.hpp"
#include "epgap/structure/minor_lemmas.hpp"
#include "epgap/structure/partition.hpp"
#include "epgap/structure/planted.hpp"
#include "epgap/structure/trees.hpp"
#include "oracles.hpp"

using namespace epgap;

namespace {

void expect_valid_cut(const Graph& t, const VertexSet& x, int k, const std::vector<VertexSet>& pieces) {
  EXPECT_GE(static_cast<int>(pieces.size()), tree_cut_guarantee(x.size(), k));
  VertexSet seen(t.n());
  for (const VertexSet& p : pieces) {
    EXPECT_FALSE(p.intersects(seen));
    seen |= p;
    EXPECT_TRUE(is_connected(t, p));
    EXPECT_GE((p & x).size(), k);
  }
}

}  // namespace

TEST(TreeCut, Examples) {
  const Graph p9 = path_graph(9);
  const auto pieces = tree_cut(p9, p9.all(), 2);
  EXPECT_GE(pieces.size(), 2u);
  expect_valid_cut(p9, p9.all(), 2, pieces);

  const Graph t = complete_ternary_tree(3);
  VertexSet leaves(t.n());
  for (int v = 0; v < t.n(); ++v) {
    if (t.degree(v) == 1) leaves.insert(v);
  }
  ASSERT_EQ(leaves.size(), 12);
  const auto cut = tree_cut(t, leaves, 2);
  EXPECT_GE(cut.size(), 3u);
  expect_valid_cut(t, leaves, 2, cut);

  EXPECT_LE(tree_cut_guarantee(5, 2), 0);
  EXPECT_THROW(tree_cut(star_graph(4), star_graph(4).all(), 2), PreconditionError);
  EXPECT_THROW(tree_cut(p9, p9.all(), 1), ParameterError);
}

TEST(TreeCut, RandomTernaryTrees) {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph t = random_ternary_tree(1 + static_cast<int>(seed % 60), seed);
    VertexSet x(t.n());
    for (int v = 0; v < t.n(); ++v) {
      if (rng.chance(0.6)) x.insert(v);
    }
    for (int k = 2; k <= 3; ++k) expect_valid_cut(t, x, k, tree_cut(t, x, k));
  }
}

TEST(Stiebitz, Examples) {
  const Graph k4 = complete_graph(4);
  const Partition two = stiebitz_partition(k4, 2);
  ASSERT_EQ(two.parts.size(), 2u);
  for (const VertexSet& p : two.parts) {
    EXPECT_EQ(p.size(), 2);
    EXPECT_EQ(induced_subgraph(k4, p).graph.m(), 1);
  }
  const Graph g = random_gnp(10, 0.5, 3);
  EXPECT_EQ(stiebitz_partition(g, 1).parts[0].size(), 10);
  const Partition edgeless = stiebitz_partition(Graph(5, {}), 3);
  EXPECT_EQ(edgeless.parts.size(), 3u);
}

TEST(Stiebitz, DegreeBoundAndPotential) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = random_gnp(5 + static_cast<int>(seed % 36), 0.15 + 0.05 * static_cast<double>(seed % 8), seed);
    const int k = 2 + static_cast<int>(seed % 3);
    const PartitionRun run = stiebitz_partition_run(g, k);
    VertexSet cover(g.n());
    for (const VertexSet& p : run.partition.parts) {
      EXPECT_FALSE(p.intersects(cover));
      cover |= p;
      p.for_each([&](int v) {
        EXPECT_GE(static_cast<double>(degree_within(g, v, p)), g.degree(v) / static_cast<double>(k) - 1.0);
      });
    }
    EXPECT_EQ(cover.size(), g.n());
    EXPECT_EQ(static_cast<int>(run.potential.size()), run.moves + 1);
    for (std::size_t i = 1; i < run.potential.size(); ++i) EXPECT_GT(run.potential[i], run.potential[i - 1]);
    EXPECT_LE(run.moves, g.m());
  }
}

TEST(ErdosSzekeres, Examples) {
  auto dec = erdos_szekeres({5, 4, 3, 2, 1}, 2, 5);
  EXPECT_FALSE(dec.increasing);
  EXPECT_EQ(dec.values, (std::vector<int>{5, 4, 3, 2, 1}));
  auto inc = erdos_szekeres({1, 2, 3, 4, 5}, 5, 2);
  EXPECT_TRUE(inc.increasing);
  EXPECT_EQ(inc.values.size(), 5u);
  auto mid = erdos_szekeres({2, 4, 1, 5, 3}, 3, 3);
  EXPECT_TRUE(mid.increasing);
  EXPECT_EQ(mid.values, (std::vector<int>{2, 4, 5}));
  EXPECT_THROW(erdos_szekeres({1, 2}, 3, 3), PreconditionError);
  EXPECT_THROW(erdos_szekeres({1, 1, 2, 3, 0}, 3, 3), PreconditionError);
}

TEST(ErdosSzekeres, ThresholdSequences) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int k = 2 + trial % 4;
    const int l = 2 + (trial / 4) % 4;
    const std::vector<int> seq = rng.permutation((k - 1) * (l - 1) + 1);
    const MonotoneSubsequence m = erdos_szekeres(seq, k, l);
    ASSERT_EQ(static_cast<int>(m.indices.size()), m.increasing ? k : l);
    for (std::size_t i = 0; i < m.indices.size(); ++i) {
      EXPECT_EQ(seq[m.indices[i]], m.values[i]);
      if (i == 0) continue;
      EXPECT_LT(m.indices[i - 1], m.indices[i]);
      EXPECT_EQ(m.values[i - 1] < m.values[i], m.increasing);
    }
  }
}

TEST(LowDegree, ExamplesAndBound) {
  EXPECT_EQ(low_degree_vertices(star_graph(9), 2).size(), 9);
  EXPECT_EQ(low_degree_vertices(complete_graph(6), 1).size(), 6);
  EXPECT_EQ(low_degree_vertices(cycle_graph(6), 3).size(), 6);
  EXPECT_THROW(low_degree_vertices(Graph(0, {}), 1), PreconditionError);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_gnp(3 + static_cast<int>(seed % 30), 0.3, seed);
    if (g.m() == 0) continue;
    const int a = 1 + static_cast<int>(seed % 3);
    const VertexSet low = low_degree_vertices(g, a);
    EXPECT_GT(static_cast<double>(low.size()), (1.0 - 1.0 / a) * g.n());
    const int dgn = g.n() <= 16 ? oracle::degeneracy(g) : degeneracy(g).value;
    low.for_each([&](int v) { EXPECT_LT(g.degree(v), 2 * a * dgn); });
  }
}

TEST(LongPath, Examples) {
  for (int h = 1; h <= 4; ++h) {
    const Graph t = complete_ternary_tree(h);
    const auto path = long_path(t);
    EXPECT_EQ(static_cast<int>(path.size()) - 1, 2 * h);
    EXPECT_NEAR(long_path_bound(t), 2.0 * h, 1e-9);
  }
  EXPECT_EQ(long_path(path_graph(1)).size(), 1u);
  EXPECT_LT(long_path_bound(path_graph(1)), 0.0);
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(static_cast<int>(long_path(path_graph(n)).size()), n);
    EXPECT_GE(n - 1, long_path_bound(path_graph(n)) - 1e-9);
  }
}

TEST(LongPath, BoundOnRandomTrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph t = random_ternary_tree(1 + static_cast<int>(seed % 80), seed);
    const auto path = long_path(t);
    EXPECT_GE(static_cast<double>(path.size()) - 1.0, long_path_bound(t) - 1e-9);
    for (std::size_t i = 1; i < path.size(); ++i) EXPECT_TRUE(t.has_edge(path[i - 1], path[i]));
  }
}

TEST(PathPartition, Examples) {
  const Graph p = path_graph(6);
  const Partition single = path_partition(p, {0, 1, 2, 3, 4, 5});
  for (const auto& part : single.parts) EXPECT_EQ(part.size(), 1);
  const Graph star = star_graph(3);
  const Partition s = path_partition(star, {1, 0, 2});
  ASSERT_EQ(s.parts.size(), 3u);
  EXPECT_TRUE(s.parts[1].contains(3));
  EXPECT_THROW(path_partition(star, {1, 2}), PreconditionError);
}

TEST(PathPartition, EveryPartHoldsLowDegreeVertex) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph t = random_ternary_tree(15, seed);
    const auto path = long_path(t);
    const Partition part = path_partition(t, path);
    ASSERT_EQ(part.parts.size(), path.size());
    VertexSet seen(t.n());
    for (std::size_t i = 0; i < path.size(); ++i) {
      EXPECT_TRUE(part.parts[i].contains(path[i]));
      EXPECT_FALSE(part.parts[i].intersects(seen));
      seen |= part.parts[i];
      bool has_x = false;
      part.parts[i].for_each([&](int v) { has_x = has_x || t.degree(v) <= 2; });
      EXPECT_TRUE(has_x);
    }
    EXPECT_EQ(seen.size(), t.n());
  }
}

TEST(DisjointMultiedges, ConstructedInstances) {
  for (int k = 1; k <= 2; ++k) {
    for (int r = 1; r <= 3; ++r) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const BipartiteMultiGraph b = planted_bipartite_multigraph(k, r, seed);
        const auto edges = disjoint_multiedges(b, k, r);
        ASSERT_EQ(static_cast<int>(edges.size()), k);
        VertexSet used(b.graph.n());
        for (const Edge& e : edges) {
          EXPECT_GE(b.graph.multiplicity(e.u, e.v), r);
          EXPECT_FALSE(used.contains(e.u) || used.contains(e.v));
          used.insert(e.u);
          used.insert(e.v);
        }
      }
    }
  }
}

TEST(DisjointMultiedges, Preconditions) {
  BipartiteMultiGraph b{MultiGraph(7), 3, 4};
  try {
    disjoint_multiedges(b, 1, 2);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_TRUE(std::string(e.what()).starts_with("balanced sides"));
  }
  BipartiteMultiGraph small = planted_bipartite_multigraph(1, 2, 3, 7);
  EXPECT_THROW(disjoint_multiedges(small, 1, 2), PreconditionError);
  BipartiteMultiGraph heavy = planted_bipartite_multigraph(1, 2, 3);
  heavy.graph.add_edge(0, heavy.left);
  EXPECT_THROW(disjoint_multiedges(heavy, 1, 2), PreconditionError);
}

TEST(Pw2InXi, Examples) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(verify_model(check_pw2_minor_of_xi(path_graph(n))));
  EXPECT_TRUE(verify_model(check_pw2_minor_of_xi(cycle_graph(4))));
  EXPECT_TRUE(verify_model(check_pw2_minor_of_xi(star_graph(3))));
  EXPECT_THROW(check_pw2_minor_of_xi(complete_graph(4)), PreconditionError);
}

TEST(Pw2InXi, RandomPathwidthTwo) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph h = random_pw2(4 + static_cast<int>(seed % 4), seed).graph;
    const MinorModel m = check_pw2_minor_of_xi(h);
    EXPECT_TRUE(verify_model(m));
    EXPECT_EQ(m.host.n(), 3 * h.n());
  }
}

TEST(BigDegeneracy, Examples) {
  const auto one = extract_k2r_from_degeneracy(complete_graph(5), 1, 2);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(verify_model(one[0]));
  const auto path = extract_k2r_from_degeneracy(cycle_graph(7), 1, 1);
  ASSERT_EQ(path.size(), 1u);
  EXPECT_TRUE(verify_model(path[0]));
  const auto two = extract_k2r_from_degeneracy(complete_graph(9), 2, 2);
  ASSERT_EQ(two.size(), 2u);
  for (const auto& m : two) EXPECT_TRUE(verify_model(m));
  EXPECT_TRUE(pairwise_disjoint(two));
  EXPECT_THROW(extract_k2r_from_degeneracy(cycle_graph(7), 1, 2), PreconditionError);
}

TEST(BigDegeneracy, FailsForTwoCopiesOfP3) {
  // dgnC(K_5) = 4 = 2kr for k = 2, r = 1, yet two disjoint P_3 need six vertices: the
  // partition leaves a part that is a single edge.
  EXPECT_GE(contraction_degeneracy(complete_graph(5)), 4);
  EXPECT_EQ(oracle::pack(complete_graph(5), path_graph(3)), 1);
  EXPECT_THROW(extract_k2r_from_degeneracy(complete_graph(5), 2, 1), WitnessError);
}

TEST(MeshToLinkage, PlantedMeshes) {
  for (int p = 1; p <= 2; ++p) {
    const int q = 1;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const PlantedMesh pm = planted_mesh((2 * p - 1) * (2 * q + 1), p * q, seed);
      const LinkageWitness lw = mesh_to_linkage(pm.graph, pm.mesh, p, q);
      EXPECT_TRUE(verify_linkage(pm.graph, lw));
      EXPECT_EQ(static_cast<int>(lw.terminal_sets.size()), 2 * q);
      for (const auto& x : lw.terminal_sets) EXPECT_EQ(x.size(), p);
      EXPECT_EQ(static_cast<int>(lw.paths.size()), p * q);
    }
  }
  const PlantedMesh pm = planted_mesh(9, 2, 4);
  MeshWitness broken = pm.mesh;
  broken.connectivity = 1;
  EXPECT_THROW(mesh_to_linkage(pm.graph, broken, 2, 1), PreconditionError);
  MeshWitness wrong = pm.mesh;
  wrong.b = wrong.b - VertexSet(pm.graph.n(), {wrong.boundary().first()});
  EXPECT_THROW(mesh_to_linkage(pm.graph, wrong, 2, 1), WitnessError);
}

TEST(LinkageToPairs, PlantedLinkages) {
  for (const auto& [p, q] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 1}}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const PlantedLinkage pl = planted_linkage(p, q, seed);
      ASSERT_TRUE(verify_linkage(pl.graph, pl.linkage));
      const PairedLinkage pairs = linkage_to_pairs(pl.graph, pl.linkage, p, q);
      EXPECT_TRUE(verify_paired_linkage(pl.graph, pairs));
      ASSERT_EQ(static_cast<int>(pairs.pairs.size()), p);
      for (const auto& pair : pairs.pairs) EXPECT_EQ(static_cast<int>(pair.paths.size()), q);
    }
  }
}

TEST(LinkageToPairs, OverlappingTrees) {
  PlantedLinkage pl = planted_linkage(1, 1, 2);
  pl.linkage.terminal_sets[1] = pl.linkage.terminal_sets[0];
  pl.linkage.trees[1] = pl.linkage.trees[0];
  try {
    linkage_to_pairs(pl.graph, pl.linkage, 1, 1);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_TRUE(std::string(e.what()).starts_with("tree disjointness")) << e.what();
  }
}

TEST(PairsToModels, XiFromPlantedPairs) {
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 2; ++k) {
      for (PartnerOrder order : {PartnerOrder::random, PartnerOrder::identity, PartnerOrder::reversed}) {
        const PlantedPairs pp = planted_paired_linkage(k, (r - 1) * (r - 1) + 1, 31 * r + 7 * k, order);
        const auto models = pairs_to_xi_models(pp.graph, pp.pairs, r, k);
        ASSERT_EQ(static_cast<int>(models.size()), k);
        for (const auto& m : models) EXPECT_TRUE(verify_model(m));
        EXPECT_TRUE(pairwise_disjoint(models));
      }
    }
  }
}

TEST(PairsToModels, K2rFromPlantedPairs) {
  for (int r = 1; r <= 3; ++r) {
    for (int k = 1; k <= 2; ++k) {
      const PlantedPairs pp = planted_paired_linkage(k, r, 100 + r * 3 + k);
      const auto models = pairs_to_k2r_models(pp.graph, pp.pairs, r, k);
      ASSERT_EQ(static_cast<int>(models.size()), k);
      for (const auto& m : models) EXPECT_TRUE(verify_model(m));
      EXPECT_TRUE(pairwise_disjoint(models));
    }
  }
  const PlantedPairs pp = planted_paired_linkage(1, 2, 5);
  EXPECT_THROW(pairs_to_k2r_models(pp.graph, pp.pairs, 3, 1), PreconditionError);
  EXPECT_THROW(pairs_to_xi_models(pp.graph, pp.pairs, 3, 1), PreconditionError);
}

TEST(Pipelines, MeshToModels) {
  // mesh -> linkage -> pairs -> models on planted instances
  const PlantedMesh pm = planted_mesh(3, 1, 9);
  const LinkageWitness lw = mesh_to_linkage(pm.graph, pm.mesh, 1, 1);
  PairedLinkage pl{{TerminalPair{lw.terminal_sets[0], lw.terminal_sets[1], lw.trees[0], lw.trees[1], lw.paths}},
                   lw.tree_support};
  ASSERT_TRUE(verify_paired_linkage(pm.graph, pl));
  const auto k21 = pairs_to_k2r_models(pm.graph, pl, 1, 1);
  EXPECT_TRUE(verify_model(k21[0]));
  const auto xi1 = pairs_to_xi_models(pm.graph, pl, 1, 1);
  EXPECT_TRUE(verify_model(xi1[0]));
}
