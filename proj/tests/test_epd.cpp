#include <gtest/gtest.h>

#include "epgap/core/generators.hpp"
#include "epgap/core/graph_io.hpp"
#include "epgap/epd/bounds.hpp"
#include "epgap/epd/certificate.hpp"
#include "epgap/epd/hitting_set.hpp"
#include "epgap/epd/packing.hpp"
#include "epgap/epd/separation.hpp"
#include "oracles.hpp"

using namespace epgap;

TEST(Bounds, Th2) {
  EXPECT_EQ(bound_th2(1, 2), 67);
  EXPECT_EQ(bound_th2(1, 1), 13);
  EXPECT_EQ(bound_th2(2, 2), 259);
  // constant term 2r - 1, not 2k - 1: the two differ by 2(r - k)
  EXPECT_EQ(bound_th2(1, 3), 20 * 9 - 8 * 3 + 2 * 3 - 1);
  EXPECT_EQ(bound_th2(3, 1), 20 * 9 - 8 * 9 + 2 - 1);
  for (int k = 1; k <= 8; ++k) {
    for (int r = 1; r <= 8; ++r) EXPECT_GE(bound_th2(k, r), 2 * r - 2);
  }
  EXPECT_THROW(bound_th2(0, 1), ParameterError);
}

TEST(Bounds, Th1) {
  EXPECT_EQ(bound_th1(1, 6), BigInt(3019825151LL));
  const Th1Bound two = bound_th1_exact(2, 6);
  EXPECT_TRUE(two.exact);
  EXPECT_EQ(two.ceiling, BigInt(4) * 2 * (BigInt(180) * (BigInt(1) << 24) - 24 * 4096) + 6 * 4096 - 1);
  const Th1Bound three = bound_th1_exact(3, 6);
  EXPECT_FALSE(three.exact);
  const double approx = 9.0 * std::log2(6.0) * (180.0 * 16777216.0 - 24.0 * 4096.0) + 6.0 * 4096.0 - 1.0;
  EXPECT_NEAR(three.ceiling.convert_to<double>(), std::ceil(approx), 1e3);
  EXPECT_GE(three.ceiling.convert_to<double>(), approx - 1.0);
  const Th1Bound odd = bound_th1_exact(1, 7);
  EXPECT_FALSE(odd.exact);
  EXPECT_NE(odd.symbolic.find("sqrt(2)"), std::string::npos);
  EXPECT_THROW(bound_th1(1, 5), ParameterError);
  // 2·log2(2·r0/3) = (r-1)² + 1 for r0 = 3·2^{r(r-2)/2}.
  for (int r = 6; r <= 12; r += 2) EXPECT_EQ(2 * (1 + r * (r - 2) / 2), (r - 1) * (r - 1) + 1);
}

TEST(Bounds, Kostochka) {
  EXPECT_DOUBLE_EQ(kostochka_threshold(1), 0.0);
  EXPECT_DOUBLE_EQ(kostochka_threshold(2), 1296.0);
  EXPECT_NEAR(kostochka_threshold(4), 3665.64, 0.01);
}

TEST(Bounds, MeshThresholds) {
  // tw < p+q-1 without a q-mesh of order p; plugging in (pq, (2p-1)(2q+1))
  // yields 5pq-2q+2p-2, one below good_mesh_threshold.
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; q <= p; ++q) {
      EXPECT_EQ(mesh_treewidth_bound((2 * p - 1) * (2 * q + 1), p * q), good_mesh_threshold(p, q) - 1);
    }
  }
  EXPECT_EQ(mesh_plus_threshold(1, 1), 13);
}

TEST(Pack, Examples) {
  EXPECT_EQ(pack_exact(complete_graph(6), complete_graph(3)).value, 2);
  EXPECT_EQ(pack_exact(disjoint_copies(3, complete_graph(3)), complete_graph(3)).value, 3);
  EXPECT_EQ(pack_exact(complete_graph(5), complete_graph(3)).value, 1);
  const PackResult r = pack_exact(disjoint_copies(2, complete_bipartite(2, 3)), complete_bipartite(2, 3));
  EXPECT_EQ(r.value, 2);
  for (const auto& m : r.models) EXPECT_TRUE(verify_model(m));
  EXPECT_TRUE(pairwise_disjoint(r.models));
  EXPECT_THROW(pack_exact(complete_graph(19), complete_bipartite(2, 3)), SizeLimitError);
}

TEST(Cover, Examples) {
  EXPECT_EQ(cover_exact(complete_graph(5), complete_graph(3)).value, 3);
  const CoverResult forest = cover_exact(random_ternary_tree(12, 3), complete_graph(3));
  EXPECT_EQ(forest.value, 0);
  EXPECT_TRUE(forest.vertices.empty());
  EXPECT_EQ(cover_exact(complete_bipartite(2, 3), complete_bipartite(2, 3)).value, 1);
}

TEST(PackCover, AgreeWithBruteForce) {
  const std::vector<Graph> patterns = {complete_graph(3), complete_bipartite(2, 2), path_graph(3), complete_bipartite(2, 3)};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = random_gnp(5 + static_cast<int>(seed % 4), 0.5, seed + 11);
    const Graph& h = patterns[seed % patterns.size()];
    const PackResult p = pack_exact(g, h);
    const CoverResult c = cover_exact(g, h);
    ASSERT_EQ(p.value, oracle::pack(g, h)) << write_graph6(g);
    ASSERT_EQ(c.value, oracle::cover(g, h)) << write_graph6(g);
    EXPECT_LE(p.value, c.value);
    EXPECT_FALSE(is_minor(without_vertices(g, c.vertices), h));
  }
}

TEST(PackingOracle, SubsetQueries) {
  const Graph g = random_gnp(9, 0.5, 4);
  const Graph h = complete_graph(3);
  PackingOracle oracle(g, h);
  Rng rng(9);
  for (int i = 0; i < 30; ++i) {
    VertexSet s(g.n());
    for (int v = 0; v < g.n(); ++v) {
      if (rng.chance(0.6)) s.insert(v);
    }
    const Subgraph sub = induced_subgraph(g, s);
    EXPECT_EQ(oracle.pack(s), oracle::pack(sub.graph, h));
  }
}

namespace {

void check_separation(const Graph& g, const Graph& h, const NiceTreeDecomposition& ntd, const BalancedSeparation& bs) {
  EXPECT_TRUE(verify_separation(g, bs.separation));
  EXPECT_LE(bs.separation.order(), ntd.decomposition.width + 1);
  const Subgraph left = induced_subgraph(g, bs.separation.a - bs.separation.b);
  EXPECT_LE(3 * pack_exact(left.graph, h).value, 2 * bs.pack);
}

}  // namespace

TEST(BalancedSeparation, Examples) {
  const Graph h = complete_graph(3);
  const Graph three = disjoint_copies(3, h);
  const NiceTreeDecomposition ntd = make_nice(three, treewidth_exact(three).decomposition);
  const BalancedSeparation bs = balanced_separation(three, h, ntd);
  EXPECT_EQ(bs.pack, 3);
  EXPECT_LE(bs.separation.order(), 3);
  check_separation(three, h, ntd, bs);

  const NiceTreeDecomposition tri = make_nice(h, treewidth_exact(h).decomposition);
  const BalancedSeparation one = balanced_separation(h, h, tri);
  EXPECT_EQ(pack_exact(induced_subgraph(h, one.separation.a - one.separation.b).graph, h).value, 0);

  const Graph tree = random_ternary_tree(8, 1);
  const BalancedSeparation none = balanced_separation(tree, h, make_nice(tree, treewidth_exact(tree).decomposition));
  EXPECT_TRUE(none.pack_zero);
  EXPECT_EQ(none.separation.a.size(), tree.n());

  EXPECT_THROW(balanced_separation(three, Graph(2, {}), ntd), PreconditionError);
}

TEST(BalancedSeparation, RandomInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_gnp(8 + static_cast<int>(seed % 5), 0.35, seed + 200);
    const Graph h = seed % 2 == 0 ? complete_graph(3) : complete_bipartite(2, 2);
    const NiceTreeDecomposition ntd = make_nice(g, treewidth_exact(g).decomposition);
    const BalancedSeparation bs = balanced_separation(g, h, ntd);
    EXPECT_EQ(bs.pack, pack_exact(g, h).value);
    if (bs.pack == 0) continue;
    EXPECT_TRUE(bs.split_kind == NodeKind::forget || bs.split_kind == NodeKind::join);
    check_separation(g, h, ntd, bs);
  }
}

TEST(HittingSet, Examples) {
  const Graph h = complete_graph(3);
  EXPECT_TRUE(hitting_set_recursive(random_ternary_tree(10, 2), h).cover.empty());
  const Graph three = disjoint_copies(3, h);
  const HittingSetRun run = hitting_set_recursive(three, h);
  EXPECT_GE(run.cover.size(), 3);
  EXPECT_FALSE(is_minor(without_vertices(three, run.cover), h));
  const HittingSetRun k5 = hitting_set_recursive(complete_graph(5), h);
  EXPECT_GE(k5.cover.size(), 3);
  EXPECT_FALSE(is_minor(without_vertices(complete_graph(5), k5.cover), h));
}

TEST(HittingSet, RandomInstancesAreValid) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnp(8 + static_cast<int>(seed % 5), 0.3, seed + 400);
    const Graph h = seed % 2 == 0 ? complete_graph(3) : complete_bipartite(2, 3);
    const HittingSetRun run = hitting_set_recursive(g, h);
    EXPECT_FALSE(is_minor(without_vertices(g, run.cover), h));
    EXPECT_GE(run.cover.size(), cover_exact(g, h).value);
    EXPECT_GE(run.cover.size(), pack_exact(g, h).value);
  }
}

TEST(WinWin, Examples) {
  const Graph k23 = complete_bipartite(2, 3);
  const Certificate two = epgap_winwin(disjoint_copies(2, k23), k23, 2);
  EXPECT_EQ(two.kind, CertificateKind::packing);
  EXPECT_EQ(two.models.size(), 2u);
  EXPECT_TRUE(verify_certificate(disjoint_copies(2, k23), k23, two));
  EXPECT_EQ(two.bound_name, "th2");
  EXPECT_EQ(*two.bound, bound_th2(2, 3));

  const Certificate one = epgap_winwin(k23, k23, 2);
  EXPECT_EQ(one.kind, CertificateKind::cover);
  EXPECT_EQ(one.cover.size(), 1);
  EXPECT_TRUE(verify_certificate(k23, k23, one));

  const Graph tree = random_ternary_tree(9, 5);
  const Certificate empty = epgap_winwin(tree, complete_graph(3), 1);
  EXPECT_EQ(empty.kind, CertificateKind::cover);
  EXPECT_TRUE(empty.cover.empty());

  Certificate forged = one;
  forged.cover = VertexSet(k23.n());
  EXPECT_EQ(verify_certificate(k23, k23, forged).clause, "cover");
}
