#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "grapheq/graph_spec.hpp"
#include "grapheq/indpoly.hpp"
#include "grapheq/poly_cache.hpp"
#include "oracles.hpp"

using namespace grapheq;
using oracle::poly;

namespace {

Graph spec(const char* text) { return build_graph(parse_graph_spec(text)); }

std::vector<Graph> corpus() {
  std::vector<Graph> out;
  for (const char* t :
       {"C3",     "C4",     "C9",       "P1",         "P2",          "P7",
        "D5",     "D9",     "K1_3",     "K4_minus_e", "A(2,1)",      "A(3,4)",
        "E(1,2)", "E(2,5)", "B(0,1,1)", "B(2,1,3)",   "C3 + A(2,1)", "C3 + C5 + A(3,1)",
        "Ga'",    "Gb'",    "Gc'"}) {
    out.push_back(spec(t));
  }
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) out.push_back(oracle::random_graph(rng, 2 + t % 17, 0.25));
  for (int t = 0; t < 30; ++t) out.push_back(oracle::random_unicyclic(rng, 3 + t % 16));
  return out;
}

}  // namespace

TEST(IndPoly, WorkedExamples) {
  EXPECT_EQ(indpoly(spec("C3")), poly({1, 3}));
  EXPECT_EQ(indpoly(spec("C9")), poly({1, 9, 27, 30, 9}));
  EXPECT_EQ(indpoly(spec("D5")), poly({1, 5, 5}));
  EXPECT_EQ(indpoly(Graph{}), poly({1}));
  EXPECT_EQ(indpoly(Graph(4)), poly({1, 4, 6, 4, 1}));
  EXPECT_EQ(indpoly(spec("K4_minus_e")), poly({1, 4, 1}));
  EXPECT_EQ(indpoly(spec("C3 + A(2,1)")), indpoly(spec("C9")));
  EXPECT_EQ(indpoly(spec("C3 + C5 + A(3,1)")), indpoly(spec("C15")));
}

TEST(IndPoly, AgreesWithBruteForceAndOracle) {
  PolyCache cache;
  for (const auto& g : corpus()) {
    const IntPoly p = indpoly(g, cache);
    EXPECT_EQ(p, indpoly_bruteforce(g)) << to_edge_list(g);
    EXPECT_EQ(p, oracle::independence_poly(g)) << to_edge_list(g);
  }
  EXPECT_THROW(indpoly_bruteforce(cycle_graph(31)), std::invalid_argument);
}

TEST(IndPoly, LowCoefficients) {
  for (const auto& g : corpus()) {
    const IntPoly p = indpoly(g);
    const auto n = static_cast<long>(g.vertex_count());
    EXPECT_EQ(p.coeff(0), 1);
    EXPECT_EQ(p.coeff(1), n);
    EXPECT_EQ(p.coeff(2), n * (n - 1) / 2 - static_cast<long>(g.edge_count()));
    EXPECT_LE(*p.degree(), g.vertex_count());
  }
}

TEST(IndPoly, ProductOverComponents) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) {
    const Graph a = oracle::random_graph(rng, 1 + t % 9, 0.4);
    const Graph b = oracle::random_unicyclic(rng, 3 + t % 7);
    EXPECT_EQ(indpoly(disjoint_union(a, b)), indpoly(a) * indpoly(b));
  }
}

TEST(IndPoly, CycleEqualsDn) {
  PolyCache cache;
  for (int n = 4; n <= 60; ++n) {
    EXPECT_EQ(indpoly(cycle_graph(n), cache), indpoly(d_graph(n), cache)) << n;
    EXPECT_EQ(indpoly(cycle_graph(n), cache), cycle_poly(static_cast<unsigned>(n))) << n;
  }
  EXPECT_NE(indpoly(cycle_graph(3)), indpoly(k1_3_graph()));
}

TEST(IndPoly, PathFormula) {
  for (unsigned n = 1; n <= 40; ++n)
    EXPECT_EQ(indpoly(path_graph(static_cast<int>(n))), path_poly(n));
}

TEST(IndPoly, FamilyIdentities) {
  PolyCache cache;
  const IntPoly one_plus_x = poly({1, 1});
  const IntPoly x = IntPoly::x();
  for (int m1 = 1; m1 <= 8; ++m1) {
    for (int m2 = 1; m2 <= 8; ++m2) {
      const IntPoly a = indpoly(a_graph(m1, m2), cache);
      EXPECT_EQ(a, indpoly(e_graph(m1, m2), cache)) << m1 << "," << m2;
      EXPECT_EQ(a, indpoly(e_graph(m2, m1), cache)) << m1 << "," << m2;
      // Pivot on the triangle vertex without an arm.
      const IntPoly rhs =
          path_poly(static_cast<unsigned>(m1 + m2 + 2)) +
          x * path_poly(static_cast<unsigned>(m1)) * path_poly(static_cast<unsigned>(m2));
      EXPECT_EQ(a, rhs) << m1 << "," << m2;
      for (int m0 = 0; m0 <= 4; ++m0) {
        const IntPoly b = indpoly(b_graph(m0, m1, m2), cache);
        EXPECT_EQ(b, indpoly_bruteforce(b_graph(m0, m1, m2)));
      }
    }
  }
  EXPECT_EQ(indpoly(spec("K1_3")), poly({1, 4, 3, 1}));
  EXPECT_EQ(one_plus_x * one_plus_x, indpoly(Graph(2)));
}

TEST(IndPoly, IndependenceNumber) {
  for (int n = 3; n <= 30; ++n)
    EXPECT_EQ(independence_number(cycle_graph(n)), static_cast<std::size_t>(n / 2));
  for (int n = 1; n <= 30; ++n) {
    EXPECT_EQ(independence_number(path_graph(n)), static_cast<std::size_t>((n + 1) / 2));
  }
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(rng, 2 + t % 14, 0.3);
    EXPECT_EQ(independence_number(g), *oracle::independence_poly(g).degree());
  }
}

TEST(IndPoly, EdgeRule) {
  EXPECT_TRUE(indpoly_edge_rule_check(cycle_graph(9), Edge(0, 1)));
  EXPECT_TRUE(indpoly_edge_rule_check(spec("C3 + A(2,1)"), Edge(0, 1)));
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_graph(rng, 3 + t % 12, 0.3);
    for (const Edge& e : g.edges()) EXPECT_TRUE(indpoly_edge_rule_check(g, e));
  }
  EXPECT_THROW(indpoly_edge_rule_check(path_graph(3), Edge(0, 2)), std::invalid_argument);
}

TEST(IndPoly, LargeCyclesThroughCache) {
  PolyCache cache;
  EXPECT_EQ(indpoly(cycle_graph(64), cache), cycle_poly(64));
  EXPECT_GT(cache.size(), 0u);
  const auto before = cache.stats().hits;
  EXPECT_EQ(indpoly(cycle_graph(64), cache), cycle_poly(64));
  EXPECT_GT(cache.stats().hits, before);
}

TEST(PolyCache, SaveLoadRoundTrip) {
  PolyCache cache;
  for (const auto& g : corpus()) indpoly(g, cache);
  std::stringstream buf;
  cache.save_jsonl(buf);
  PolyCache loaded;
  const auto report = loaded.load_jsonl(buf);
  EXPECT_EQ(report.skipped, 0u);
  EXPECT_EQ(report.loaded, cache.size());
  EXPECT_EQ(loaded.entries(), cache.entries());
  std::stringstream again;
  loaded.save_jsonl(again);
  std::stringstream first;
  cache.save_jsonl(first);
  EXPECT_EQ(again.str(), first.str());
}

TEST(PolyCache, RejectsCorruptEntries) {
  PolyCache cache;
  indpoly(cycle_graph(5), cache);
  indpoly(cycle_graph(20), cache);
  std::stringstream buf;
  cache.save_jsonl(buf);
  std::string text = buf.str();

  const std::string c5_key = canonical_key(cycle_graph(5)).to_base64();
  std::stringstream bad;
  bad << text << "not json\n"
      << R"({"key": ")" << c5_key << R"(", "coeffs": ["1", "5", "5", "1"]})" << "\n"
      << R"({"key": "AAAA", "coeffs": ["1"]})" << "\n"
      << R"({"key": ")" << canonical_key(k1_3_graph()).to_base64()
      << R"(", "coeffs": ["1", "4", "3", "2"]})" << "\n"
      << R"({"coeffs": ["1"]})" << "\n";
  PolyCache loaded;
  const auto report = loaded.load_jsonl(bad);
  EXPECT_EQ(report.loaded, cache.size());
  EXPECT_EQ(report.skipped, 5u);
  EXPECT_EQ(report.warnings.size(), 5u);
  EXPECT_EQ(loaded.find(canonical_key(cycle_graph(5))), cycle_poly(5));
  EXPECT_FALSE(loaded.find(canonical_key(k1_3_graph())).has_value());
}

TEST(PolyCache, WrongPolynomialForLargeGraphIsRejected) {
  // Above the brute-force threshold the low-coefficient checks still apply.
  const Graph g = cycle_graph(20);
  IntPoly wrong = cycle_poly(20);
  wrong += IntPoly::monomial(1, 2);
  std::stringstream buf;
  buf << R"({"key": ")" << canonical_key(g).to_base64() << R"(", "coeffs": [)";
  for (std::size_t k = 0; k < wrong.coeffs().size(); ++k) {
    buf << (k ? ", " : "") << '"' << wrong.coeffs()[k].get_str() << '"';
  }
  buf << "]}\n";
  PolyCache cache;
  const auto report = cache.load_jsonl(buf);
  EXPECT_EQ(report.loaded, 0u);
  EXPECT_EQ(report.skipped, 1u);
}
