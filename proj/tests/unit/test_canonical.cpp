#include <gtest/gtest.h>

#include <random>

#include "grapheq/canonical.hpp"
#include "grapheq/graph_spec.hpp"
#include "oracles.hpp"

using namespace grapheq;

namespace {

Graph spec(const char* text) { return build_graph(parse_graph_spec(text)); }

}  // namespace

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(5);
  std::vector<Graph> corpus{spec("C9"),
                            spec("D9"),
                            spec("C3 + A(2,1)"),
                            spec("B(2,3,1)"),
                            spec("C3 + C5 + A(3,1)"),
                            spec("E(4,2) + K1_3"),
                            spec("C21"),
                            spec("C3 + C7 + B(1,2,2)")};
  for (int t = 0; t < 40; ++t) corpus.push_back(oracle::random_graph(rng, 5 + t % 30, 0.15));
  for (const auto& g : corpus) {
    const CanonicalKey k = canonical_key(g);
    for (int r = 0; r < 5; ++r) {
      EXPECT_EQ(canonical_key(oracle::shuffle_labels(rng, g)), k) << to_edge_list(g);
    }
  }
}

TEST(Canonical, AgreesWithPermutationIsomorphism) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 400; ++t) {
    const unsigned n = 3 + t % 5;
    const Graph a = oracle::random_graph(rng, n, 0.5);
    const Graph b = oracle::random_graph(rng, n, 0.5);
    if (a.edge_count() != b.edge_count()) continue;
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic_by_permutation(a, b))
        << to_edge_list(a) << " / " << to_edge_list(b);
  }
}

TEST(Canonical, DistinguishesKnownPairs) {
  EXPECT_EQ(canonical_key(spec("A(2,1)")), canonical_key(spec("A(1,2)")));
  EXPECT_NE(canonical_key(spec("E(2,1)")), canonical_key(spec("E(1,2)")));
  EXPECT_NE(canonical_key(spec("C9")), canonical_key(spec("D9")));
  EXPECT_NE(canonical_key(spec("C6")), canonical_key(spec("C3 + C3")));
  EXPECT_NE(canonical_key(spec("A(3,1)")), canonical_key(spec("A(2,2)")));
  EXPECT_EQ(canonical_key(spec("C3 + C5")), canonical_key(spec("C5 + C3")));
}

TEST(Canonical, RegularGraphsAreHandled) {
  // Petersen graph versus the 5-prism: both 3-regular on 10 vertices.
  const Graph petersen(10, {{0, 1},
                            {1, 2},
                            {2, 3},
                            {3, 4},
                            {4, 0},
                            {0, 5},
                            {1, 6},
                            {2, 7},
                            {3, 8},
                            {4, 9},
                            {5, 7},
                            {7, 9},
                            {9, 6},
                            {6, 8},
                            {8, 5}});
  const Graph prism(10, {{0, 1},
                         {1, 2},
                         {2, 3},
                         {3, 4},
                         {4, 0},
                         {0, 5},
                         {1, 6},
                         {2, 7},
                         {3, 8},
                         {4, 9},
                         {5, 6},
                         {6, 7},
                         {7, 8},
                         {8, 9},
                         {9, 5}});
  EXPECT_NE(canonical_key(petersen), canonical_key(prism));
  std::mt19937_64 rng(29);
  for (int r = 0; r < 5; ++r) {
    EXPECT_EQ(canonical_key(oracle::shuffle_labels(rng, petersen)), canonical_key(petersen));
  }
  std::vector<Edge> hyper;
  for (Vertex v = 0; v < 64; ++v) {
    for (int b = 0; b < 6; ++b) {
      const Vertex w = v ^ (1u << b);
      if (v < w) hyper.emplace_back(v, w);
    }
  }
  const Graph q6(64, hyper);
  EXPECT_EQ(canonical_key(oracle::shuffle_labels(rng, q6)), canonical_key(q6));
}

TEST(Canonical, RefusesOversizedComponents) {
  EXPECT_NO_THROW(canonical_key(cycle_graph(64)));
  EXPECT_THROW(canonical_key(cycle_graph(65)), CanonicalizationRefused);
  EXPECT_NO_THROW(canonical_key(disjoint_union(cycle_graph(60), cycle_graph(60))));
}

TEST(Canonical, KeyRoundTrips) {
  for (const char* text : {"C9", "D9", "C3 + A(2,1)", "P1", "P1 + P1 + C5", "B(0,1,1)"}) {
    const Graph g = spec(text);
    const CanonicalKey k = canonical_key(g);
    const Graph back = graph_from_key(k);
    EXPECT_EQ(canonical_key(back), k) << text;
    EXPECT_TRUE(oracle::isomorphic_by_permutation(back, g) || g.vertex_count() > 9) << text;
    EXPECT_EQ(CanonicalKey::from_base64(k.to_base64()), k);
  }
  EXPECT_EQ(canonical_key(Graph{}).bytes().size(), 0u);
  EXPECT_THROW(CanonicalKey::from_base64("!!"), std::invalid_argument);
  EXPECT_THROW(graph_from_key(CanonicalKey({0})), std::invalid_argument);
  EXPECT_THROW(graph_from_key(CanonicalKey({9, 0})), std::invalid_argument);
  EXPECT_THROW(graph_from_key(CanonicalKey({3, 0xFF})), std::invalid_argument);
}

TEST(Canonical, FormOrderIsAPermutation) {
  const Graph g = spec("B(2,1,3)");
  const CanonicalForm f = canonical_form_connected(g);
  ASSERT_EQ(f.order.size(), g.vertex_count());
  std::vector<Vertex> inv(g.vertex_count());
  for (std::size_t p = 0; p < f.order.size(); ++p) inv[f.order[p]] = static_cast<Vertex>(p);
  EXPECT_EQ(relabel(g, inv), graph_from_key(f.key));
}
