#include <gtest/gtest.h>

#include "epgap/core/generators.hpp"
#include "epgap/io/json.hpp"
#include "epgap/structure/planted.hpp"
#include "epgap/width/treewidth.hpp"

using namespace epgap;

TEST(Json, ModelRoundTrip) {
  const Graph host = complete_graph(6);
  const Graph pattern = complete_graph(3);
  const auto model = find_minor_model(host, pattern);
  ASSERT_TRUE(model.has_value());
  const Json j = to_json(*model);
  EXPECT_EQ(j.at("host_hash"), graph_hash(host));
  const MinorModel back = model_from_json(Json::parse(j.dump()), pattern, host);
  EXPECT_TRUE(verify_model(back));
  for (int p = 0; p < 3; ++p) EXPECT_EQ(back.branch_sets[p], model->branch_sets[p]);
  EXPECT_THROW(model_from_json(j, pattern, complete_graph(5)), ParseError);
}

TEST(Json, PaceRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnp(9, 0.4, seed);
    const TreeDecomposition td = treewidth_exact(g).decomposition;
    const TreeDecomposition back = parse_pace_td(write_pace_td(td, g));
    EXPECT_EQ(back.width, td.width);
    ASSERT_EQ(back.node_count(), td.node_count());
    for (int t = 0; t < td.node_count(); ++t) EXPECT_EQ(back.bags[t], td.bags[t]);
    EXPECT_TRUE(verify_decomposition(g, back));
  }
  const std::string k3 = "s td 1 3 3\nb 1 1 2 3\n";
  EXPECT_EQ(parse_pace_td(k3).width, 2);
  EXPECT_THROW(parse_pace_td("s td 1 3 3\nb 1 1 2 9\n"), ParseError);
  EXPECT_THROW(parse_pace_td("b 1 1\n"), ParseError);
}

TEST(Json, CertificateShapes) {
  const Graph k23 = complete_bipartite(2, 3);
  const Graph two = disjoint_copies(2, k23);
  const Json packing = to_json(epgap_winwin(two, k23, 2), two, k23);
  EXPECT_EQ(packing.at("type"), "packing");
  EXPECT_EQ(packing.at("models").size(), 2u);
  EXPECT_EQ(packing.at("bound").at("value"), bound_th2(2, 3).str());
  const Json cover = to_json(epgap_winwin(k23, k23, 2), k23, k23);
  EXPECT_EQ(cover.at("type"), "cover");
  EXPECT_EQ(cover.at("vertices").size(), 1u);
  EXPECT_EQ(cover.at("graph_hash"), graph_hash(k23));
}

TEST(Json, Witnesses) {
  const PlantedMesh pm = planted_mesh(3, 1, 2);
  const Json mesh = to_json(pm.mesh, pm.graph);
  EXPECT_EQ(mesh.at("order"), 3);
  EXPECT_EQ(mesh.at("tree_edges").size(), pm.mesh.tree_edges.size());
  const PlantedLinkage pl = planted_linkage(1, 1, 3);
  EXPECT_EQ(to_json(pl.linkage, pl.graph).at("paths").size(), pl.linkage.paths.size());
}
