#include "grapheq/census.hpp"

namespace grapheq {

SubgraphCensus subgraph_census(const Graph& g) {
  SubgraphCensus c;
  const std::size_t n = g.vertex_count();
  const auto& edges = g.edges();
  const std::size_t m = edges.size();

  // Pairs of edges: disjoint pairs are 2P_2; pairs sharing a vertex are P_3,
  // each completed by any vertex outside it.
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Edge& e = edges[a];
      const Edge& f = edges[b];
      const bool share = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
      if (!share) {
        ++c.e2;
        continue;
      }
      for (Vertex w = 0; w < n; ++w) {
        if (w != e.u && w != e.v && w != f.u && w != f.v) ++c.p3_k1;
      }
    }
  }

  // Triangles, each with an outside vertex or with a pendant edge.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.has_edge(u, w)) continue;
        ++c.triangles;
        for (Vertex x = 0; x < n; ++x) {
          if (x != u && x != v && x != w) ++c.c3_k1;
        }
        for (Vertex corner : {u, v, w}) {
          for (Vertex x : g.neighbors(corner)) {
            if (x != u && x != v && x != w) ++c.d4;
          }
        }
      }
    }
  }

  // P_4 by its middle edge.
  for (const Edge& mid : edges) {
    for (Vertex a : g.neighbors(mid.u)) {
      if (a == mid.v) continue;
      for (Vertex b : g.neighbors(mid.v)) {
        if (b != mid.u && b != a) ++c.p4;
      }
    }
  }

  // K_{1,3} by centre and a 3-set of its neighbours.
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        for (std::size_t k = j + 1; k < nb.size(); ++k) ++c.k13;
      }
    }
  }

  // C_4 as u < {v, x}, w: u is the least vertex, v < x its cycle neighbours.
  for (Vertex u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex v = nb[i];
      if (v <= u) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex x = nb[j];
        if (x <= u) continue;
        for (Vertex w : g.neighbors(v)) {
          if (w > u && w != x && g.has_edge(w, x)) ++c.c4;
        }
      }
    }
  }
  return c;
}

}  // namespace grapheq
