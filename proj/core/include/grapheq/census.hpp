#pragma once

#include <cstdint>

#include "grapheq/graph.hpp"

namespace grapheq {

/// Counts of (not necessarily induced) small subgraphs. Each count is the
/// number of subgraphs of G isomorphic to the pattern, where a subgraph is a
/// vertex set together with an edge subset.
struct SubgraphCensus {
  std::uint64_t e2 = 0;         ///< 2P_2: matchings of size 2
  std::uint64_t p3_k1 = 0;      ///< P_3 ∪ K_1
  std::uint64_t c3_k1 = 0;      ///< C_3 ∪ K_1
  std::uint64_t p4 = 0;         ///< P_4 (three edges)
  std::uint64_t k13 = 0;        ///< K_{1,3}
  std::uint64_t d4 = 0;         ///< triangle with a pendant edge
  std::uint64_t c4 = 0;         ///< C_4
  std::uint64_t triangles = 0;  ///< C_3

  friend bool operator==(const SubgraphCensus&, const SubgraphCensus&) = default;
};

/// Direct enumeration over vertex and edge tuples.
SubgraphCensus subgraph_census(const Graph& g);

}  // namespace grapheq
