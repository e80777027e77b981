#include "relgap/features.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "support.hpp"

namespace relgap {
namespace {

using testing::I;

ClassGraph path_a_z_b() {
  ClassGraph g;
  g.add_edge(I("A"), I("Z"));
  g.add_edge(I("Z"), I("B"));
  return g;
}

EmbeddingStore tiny_store() {
  EmbeddingStore s(2);
  s.insert("graph", {1.0, 0.0});
  s.insert("tree", {1.0, 1.0});
  return s;
}

TEST(CommonNeighbours, Disjoint) {
  ClassGraph g;
  g.add_edge(I("A"), I("X"));
  g.add_edge(I("B"), I("Y"));
  EXPECT_EQ(common_neighbours(g, I("A"), I("B")), 0u);
}

TEST(CommonNeighbours, Path) { EXPECT_EQ(common_neighbours(path_a_z_b(), I("A"), I("B")), 1u); }

TEST(CommonNeighbours, Errors) {
  auto g = path_a_z_b();
  EXPECT_THROW(common_neighbours(g, I("A"), I("A")), InputError);
  EXPECT_THROW(common_neighbours(g, I("A"), I("Q")), InputError);
  EXPECT_THROW(adamic_adar(g, I("Q"), I("A")), InputError);
}

TEST(CommonNeighbours, MatchesBruteForceOn20Nodes) {
  testing::Rng rng(7);
  auto eg = testing::random_graph(rng, 20, 0.3);
  ClassGraph g;
  for (std::size_t i = 0; i < eg.n; ++i) g.add_node(Iri{testing::node_name(i)});
  for (auto [a, b] : eg.edges) g.add_edge(Iri{testing::node_name(a)}, Iri{testing::node_name(b)});
  for (std::size_t x = 0; x < eg.n; ++x) {
    for (std::size_t y = x + 1; y < eg.n; ++y) {
      Iri ix{testing::node_name(x)}, iy{testing::node_name(y)};
      EXPECT_EQ(common_neighbours(g, ix, iy), testing::oracle_cn(eg, x, y));
      EXPECT_NEAR(adamic_adar(g, ix, iy), testing::oracle_aa(eg, x, y), 1e-12);
    }
  }
}

TEST(AdamicAdar, NoCommonNeighbours) {
  ClassGraph g;
  g.add_node(I("A"));
  g.add_node(I("B"));
  EXPECT_EQ(adamic_adar(g, I("A"), I("B")), 0.0);
}

TEST(AdamicAdar, DegreeTwoNeighbour) {
  EXPECT_NEAR(adamic_adar(path_a_z_b(), I("A"), I("B")), 1.4426950408889634, 1e-12);
}

TEST(ExtractFeatures, IsolatedIdenticalLabels) {
  ClassGraph g;
  g.add_node(I("A"));
  g.add_node(I("B"));
  LabelMap labels{{I("A"), "Graph"}, {I("B"), "graph"}};
  auto fv = extract_features(g, tiny_store(), labels, I("A"), I("B"));
  EXPECT_EQ(fv.cn, 0u);
  EXPECT_EQ(fv.aa, 0.0);
  ASSERT_TRUE(fv.glove_sim);
  EXPECT_EQ(*fv.glove_sim, 1.0);
}

TEST(ExtractFeatures, UnembeddableLabelsAreMissing) {
  LabelMap labels{{I("A"), "Qzxqv"}, {I("B"), "Vvqxz"}};
  Warnings w;
  auto fv = extract_features(path_a_z_b(), tiny_store(), labels, I("A"), I("B"), &w);
  EXPECT_EQ(fv.cn, 1u);
  EXPECT_NEAR(fv.aa, 1.0 / std::log(2.0), 1e-12);
  EXPECT_FALSE(fv.glove_sim);
  ASSERT_FALSE(w.empty());
  EXPECT_NE(w[0].find("Qzxqv"), std::string::npos);
}

TEST(ExtractFeatures, SwapIsIdentical) {
  LabelMap labels{{I("A"), "graph"}, {I("B"), "tree"}};
  auto g = path_a_z_b();
  EXPECT_EQ(extract_features(g, tiny_store(), labels, I("A"), I("B")),
            extract_features(g, tiny_store(), labels, I("B"), I("A")));
}

TEST(ExtractFeatures, FallsBackToLocalName) {
  ClassGraph g;
  g.add_node(I("graph"));
  g.add_node(I("tree"));
  auto fv = extract_features(g, tiny_store(), {}, I("graph"), I("tree"));
  ASSERT_TRUE(fv.glove_sim);
  EXPECT_NEAR(*fv.glove_sim, 0.7071067811865475, 1e-12);
}

TEST(FeatureDump, RoundTripAndMissingField) {
  std::vector<FeatureRecord> rows{
      {"A", "B,with comma", {2, 1.4426950408889634, 0.25}, true},
      {"C", "D", {0, 0.0, std::nullopt}, std::nullopt},
      {"E", "F", {1, 0.9102392266268373, -0.5}, false},
  };
  std::ostringstream out;
  write_feature_dump(out, rows);
  EXPECT_NE(out.str().find("C,D,0,0,,?"), std::string::npos);
  std::istringstream in(out.str());
  EXPECT_EQ(read_feature_dump(in), rows);
}

TEST(FeatureDump, RejectsBadValues) {
  std::istringstream bad_label("class_x,class_y,cn,aa,glove_sim,label\nA,B,1,0.5,0.1,yes\n");
  EXPECT_THROW(read_feature_dump(bad_label), ParseError);
  std::istringstream bad_cn("class_x,class_y,cn,aa,glove_sim,label\nA,B,1.5,0.5,0.1,1\n");
  EXPECT_THROW(read_feature_dump(bad_cn), ParseError);
  std::istringstream bad_sim("class_x,class_y,cn,aa,glove_sim,label\nA,B,1,0.5,1.5,1\n");
  EXPECT_THROW(read_feature_dump(bad_sim), ParseError);
}

}  // namespace
}  // namespace relgap
