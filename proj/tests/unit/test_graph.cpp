#include <gtest/gtest.h>

#include <random>

#include "grapheq/canonical.hpp"
#include "grapheq/census.hpp"
#include "grapheq/graph.hpp"
#include "grapheq/graph6.hpp"
#include "grapheq/graph_spec.hpp"
#include "oracles.hpp"

using namespace grapheq;

namespace {

Graph spec(const char* text) { return build_graph(parse_graph_spec(text)); }

std::map<std::size_t, std::size_t> hist(
    std::initializer_list<std::pair<const std::size_t, std::size_t>> l) {
  return std::map<std::size_t, std::size_t>(l);
}

}  // namespace

TEST(Graph, RejectsInvalidEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_NO_THROW(Graph(3, {{0, 1}, {1, 2}}));
}

TEST(Graph, FamilySizes) {
  const Graph c3 = spec("Cycle(3)");
  EXPECT_EQ(c3.vertex_count(), 3u);
  EXPECT_EQ(c3.edge_count(), 3u);
  const Graph d5 = spec("Dn(5)");
  EXPECT_EQ(d5.vertex_count(), 5u);
  EXPECT_EQ(d5.edge_count(), 5u);
  EXPECT_EQ(degree_histogram(d5), hist({{1, 1}, {2, 3}, {3, 1}}));
  EXPECT_EQ(subgraph_census(d5).triangles, 1u);
  EXPECT_EQ(spec("B(0,1,1)").vertex_count(), 6u);
  EXPECT_EQ(spec("B(0,1,1)").edge_count(), 6u);
  EXPECT_TRUE(is_isomorphic(spec("B(0,1,1)"), spec("Gd")));
  EXPECT_EQ(spec("A(2,1)").vertex_count(), 6u);
  EXPECT_EQ(spec("Union(Cycle(3), A(2,1))").vertex_count(), 9u);
  for (int m1 = 1; m1 <= 5; ++m1) {
    for (int m2 = 1; m2 <= 5; ++m2) {
      EXPECT_EQ(a_graph(m1, m2).vertex_count(), static_cast<std::size_t>(m1 + m2 + 3));
      EXPECT_EQ(e_graph(m1, m2).vertex_count(), static_cast<std::size_t>(m1 + m2 + 3));
      for (int m0 = 0; m0 <= 3; ++m0) {
        EXPECT_EQ(b_graph(m0, m1, m2).vertex_count(), static_cast<std::size_t>(m0 + m1 + m2 + 4));
      }
    }
  }
}

TEST(Graph, FamiliesAreUnicyclic) {
  for (int n = 3; n <= 20; ++n) EXPECT_TRUE(is_unicyclic(cycle_graph(n)));
  for (int n = 4; n <= 20; ++n) EXPECT_TRUE(is_unicyclic(d_graph(n)));
  for (int m1 = 1; m1 <= 6; ++m1) {
    for (int m2 = 1; m2 <= 6; ++m2) {
      EXPECT_TRUE(is_unicyclic(a_graph(m1, m2)));
      EXPECT_TRUE(is_unicyclic(e_graph(m1, m2)));
      for (int m0 = 0; m0 <= 4; ++m0) EXPECT_TRUE(is_unicyclic(b_graph(m0, m1, m2)));
    }
  }
  for (const auto& id : named_graph_ids()) EXPECT_TRUE(is_unicyclic(named_graph(id))) << id;
  EXPECT_TRUE(is_unicyclic(spec("B(1,2,1)")));
  EXPECT_TRUE(is_unicyclic(cycle_graph(7)));
  EXPECT_FALSE(is_unicyclic(path_graph(5)));
}

TEST(Graph, NamedGraphsMatchFamilies) {
  EXPECT_TRUE(oracle::isomorphic_by_permutation(spec("Ga"), spec("A(2,1)")));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(spec("Gb"), spec("E(1,2)")));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(spec("Gc"), spec("E(2,1)")));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(spec("Gd"), spec("B(0,1,1)")));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(spec("Ga'"), spec("A(3,1)")));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(spec("Gb'"), spec("E(1,3)")));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(spec("Gc'"), spec("E(3,1)")));
}

TEST(Graph, DeleteVertex) {
  EXPECT_TRUE(is_isomorphic(delete_vertex(cycle_graph(3), 1), path_graph(2)));
  for (Vertex v = 0; v < 9; ++v) {
    EXPECT_TRUE(is_isomorphic(delete_vertex(cycle_graph(9), v), path_graph(8)));
  }
  EXPECT_EQ(delete_vertex(cycle_graph(9), 0).edge_count(), 7u);
  const Graph d5 = d_graph(5);
  ASSERT_EQ(d5.degree(2), 3u);
  const Graph rest = delete_vertex(d5, 2);
  EXPECT_TRUE(is_isomorphic(rest, disjoint_union(path_graph(2), path_graph(2))));
  EXPECT_EQ(rest.edge_count(), d5.edge_count() - 3);
  EXPECT_THROW(delete_vertex(d5, 5), std::out_of_range);
}

TEST(Graph, DeleteClosedNeighborhood) {
  EXPECT_EQ(delete_closed_neighborhood(cycle_graph(3), 0).vertex_count(), 0u);
  for (Vertex v = 0; v < 9; ++v) {
    EXPECT_TRUE(is_isomorphic(delete_closed_neighborhood(cycle_graph(9), v), path_graph(6)));
  }
  EXPECT_TRUE(is_isomorphic(delete_closed_neighborhood(a_graph(2, 1), 5), path_graph(4)));
  EXPECT_TRUE(is_isomorphic(delete_vertex(a_graph(2, 1), 5), d_graph(5)));
  EXPECT_THROW(delete_closed_neighborhood(cycle_graph(3), 3), std::out_of_range);
}

TEST(Graph, DeleteEdgeClosure) {
  auto [c3e, c3r] = delete_edge_closure(cycle_graph(3), Edge(0, 1));
  EXPECT_TRUE(is_isomorphic(c3e, path_graph(3)));
  EXPECT_EQ(c3r.vertex_count(), 0u);
  auto [c5e, c5r] = delete_edge_closure(cycle_graph(5), Edge(1, 2));
  EXPECT_TRUE(is_isomorphic(c5e, path_graph(5)));
  EXPECT_TRUE(is_isomorphic(c5r, path_graph(1)));
  auto [p2e, p2r] = delete_edge_closure(path_graph(2), Edge(0, 1));
  EXPECT_EQ(p2e.vertex_count(), 2u);
  EXPECT_EQ(p2e.edge_count(), 0u);
  EXPECT_EQ(p2r.vertex_count(), 0u);
  EXPECT_THROW(delete_edge_closure(path_graph(3), Edge(0, 2)), std::invalid_argument);
}

TEST(Graph, Components) {
  const auto cs = connected_components(spec("C5 + C3"));
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_EQ(cs[0].vertex_count(), 3u);
  EXPECT_EQ(cs[1].vertex_count(), 5u);
  EXPECT_TRUE(connected_components(Graph{}).empty());
  const auto three = connected_components(spec("Union(Cycle(3), Cycle(5), A(3,1))"));
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0].vertex_count(), 3u);
  EXPECT_EQ(three[1].vertex_count(), 5u);
  EXPECT_EQ(three[2].vertex_count(), 7u);
}

TEST(Graph, DegreeHistograms) {
  EXPECT_EQ(degree_histogram(cycle_graph(9)), hist({{2, 9}}));
  EXPECT_EQ(degree_histogram(d_graph(9)), hist({{1, 1}, {2, 7}, {3, 1}}));
  EXPECT_EQ(degree_histogram(spec("C3 + A(2,1)")), hist({{1, 2}, {2, 5}, {3, 2}}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 10, 0.3);
    std::size_t count = 0;
    std::size_t weighted = 0;
    for (auto [d, c] : degree_histogram(g)) {
      count += c;
      weighted += d * c;
    }
    EXPECT_EQ(count, g.vertex_count());
    EXPECT_EQ(weighted, 2 * g.edge_count());
  }
}

TEST(Graph, EdgeListRoundTrip) {
  const Graph g = spec("C3 + B(1,2,1)");
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  EXPECT_EQ(to_edge_list(cycle_graph(3)), "3; 0-1, 0-2, 1-2");
  EXPECT_THROW(parse_edge_list("3 0-1"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("3; 0-1,"), std::invalid_argument);
  EXPECT_THROW(parse_edge_list("3; 0-7"), std::invalid_argument);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(emit_graph6(Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})), "C~");
  EXPECT_EQ(emit_graph6(Graph(0)), "?");
  EXPECT_EQ(emit_graph6(path_graph(2)), "A_");
}

TEST(Graph6, RoundTrip) {
  EXPECT_TRUE(is_isomorphic(parse_graph6(emit_graph6(cycle_graph(9))), cycle_graph(9)));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + t % 40, 0.2);
    EXPECT_EQ(parse_graph6(emit_graph6(g)), g);
  }
}

TEST(Graph6, Errors) {
  EXPECT_THROW(parse_graph6(""), Graph6Error);
  EXPECT_THROW(parse_graph6("C~~"), Graph6Error);
  try {
    parse_graph6("D !?");
    FAIL();
  } catch (const Graph6Error& e) {
    EXPECT_GT(e.offset(), 0u);
  }
  EXPECT_THROW(parse_graph6("A`"), Graph6Error);  // padding bit set
  EXPECT_THROW(parse_graph6("~?@?"), Graph6Error);
  EXPECT_THROW(emit_graph6(cycle_graph(63)), std::invalid_argument);
}

TEST(GraphSpec, ParsesAllForms) {
  EXPECT_EQ(spec("C9"), cycle_graph(9));
  EXPECT_EQ(spec("Cycle( 9 )"), cycle_graph(9));
  EXPECT_EQ(spec("P4"), path_graph(4));
  EXPECT_EQ(spec("D9"), d_graph(9));
  EXPECT_EQ(spec("Dn(9)"), d_graph(9));
  EXPECT_EQ(spec("K1_3"), k1_3_graph());
  EXPECT_EQ(spec("K4_minus_e").edge_count(), 5u);
  EXPECT_EQ(spec("g6:C~").edge_count(), 6u);
  EXPECT_EQ(spec("Graph6(C~)").edge_count(), 6u);
  EXPECT_EQ(spec("el:3; 0-1, 1-2"), path_graph(3));
  EXPECT_EQ(spec("C3 + Gd"), disjoint_union(cycle_graph(3), named_graph("Gd")));
  EXPECT_EQ(spec("Union(C3, C5, Ga')").vertex_count(), 15u);
  EXPECT_EQ(spec("C3+g6:C~ + P2").vertex_count(), 9u);
}

TEST(GraphSpec, RoundTripsThroughText) {
  for (const char* text : {"C9", "D5", "A(2,1)", "B(0,1,1)", "E(3,1)", "C3 + C5 + A(3,1)", "Gb'",
                           "K1_3 + K4_minus_e", "P2"}) {
    const GraphSpec s = parse_graph_spec(text);
    EXPECT_EQ(parse_graph_spec(to_string(s)), s) << text;
  }
}

TEST(GraphSpec, EnforcesBounds) {
  auto message = [](const char* text) {
    try {
      parse_graph_spec(text);
    } catch (const SpecParseError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_NE(message("Cycle(2)").find("n >= 3"), std::string::npos);
  EXPECT_NE(message("Path(0)").find("n >= 1"), std::string::npos);
  EXPECT_NE(message("D3").find("n >= 4"), std::string::npos);
  EXPECT_NE(message("A(0,1)").find("m1 >= 1"), std::string::npos);
  EXPECT_NE(message("A(1,0)").find("m2 >= 1"), std::string::npos);
  EXPECT_NE(message("B(-1,1,1)").find("m1 >= 0"), std::string::npos);
  EXPECT_NE(message("B(0,1,0)").find("m3 >= 1"), std::string::npos);
  EXPECT_NE(message("E(1,0)").find("m2 >= 1"), std::string::npos);
  for (const char* bad : {"", "garbage", "C", "A(1)", "A(1,2", "Gd'", "Union()", "C3 +",
                          "g6:", "C3 C5", "B(1,1,1,1)"}) {
    EXPECT_THROW(parse_graph_spec(bad), SpecParseError) << bad;
  }
  EXPECT_THROW(d_graph(3), std::invalid_argument);
}

TEST(Census, WorkedValues) {
  const SubgraphCensus c9 = subgraph_census(cycle_graph(9));
  EXPECT_EQ(c9.e2, 27u);
  EXPECT_EQ(c9.p3_k1, 54u);
  EXPECT_EQ(c9.p4, 9u);
  EXPECT_EQ(c9.triangles, 0u);
  EXPECT_EQ(c9.c3_k1 + c9.k13 + c9.d4 + c9.c4, 0u);

  const SubgraphCensus g = subgraph_census(spec("C3 + A(2,1)"));
  EXPECT_EQ(g.e2, 25u);
  EXPECT_EQ(g.p3_k1, 66u);
  EXPECT_EQ(g.c3_k1, 12u);
  EXPECT_EQ(g.p4, 7u);
  EXPECT_EQ(g.k13, 2u);
  EXPECT_EQ(g.d4, 2u);
  EXPECT_EQ(g.c4, 0u);

  EXPECT_EQ(subgraph_census(k4_minus_e_graph()).triangles, 2u);
}

TEST(Census, AgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(23);
  std::vector<Graph> corpus{
      cycle_graph(4),
      k4_minus_e_graph(),
      k1_3_graph(),
      spec("C3 + A(2,1)"),
      spec("C3 + C5 + A(1,1)"),
      Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})};
  for (int t = 0; t < 60; ++t) corpus.push_back(oracle::random_graph(rng, 4 + t % 7, 0.45));
  for (int t = 0; t < 30; ++t) corpus.push_back(oracle::random_unicyclic(rng, 4 + t % 7));
  for (const auto& g : corpus) {
    EXPECT_EQ(subgraph_census(g), oracle::naive_census(g)) << to_edge_list(g);
  }
}
