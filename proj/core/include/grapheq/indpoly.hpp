#pragma once

#include <cstddef>

#include "grapheq/graph.hpp"
#include "grapheq/intpoly.hpp"
#include "grapheq/poly_cache.hpp"

namespace grapheq {

inline constexpr std::size_t kMaxBruteForceVertices = 30;

/// I(G,x) by enumerating vertex subsets as bit masks. Independent of the
/// recursive engine; used as the oracle. Throws std::invalid_argument above
/// kMaxBruteForceVertices vertices.
IntPoly indpoly_bruteforce(const Graph& g);

/// I(G,x) through component products and the vertex-deletion recurrence
/// I(G) = I(G-u) + x I(G-N[u]), memoized per canonical component.
/// The pivot u is a maximum-degree vertex, ties broken by canonical position.
/// Propagates CanonicalizationRefused.
IntPoly indpoly(const Graph& g, PolyCache& cache);
IntPoly indpoly(const Graph& g);

/// Recomputes I(G,x) as I(G-e) - x^2 I(G - (N(u) ∪ N(v))) and compares it to
/// indpoly(g). Throws std::invalid_argument if e is not an edge.
bool indpoly_edge_rule_check(const Graph& g, Edge e, PolyCache& cache);
bool indpoly_edge_rule_check(const Graph& g, Edge e);

/// Degree of I(G,x).
std::size_t independence_number(const Graph& g, PolyCache& cache);
std::size_t independence_number(const Graph& g);

}  // namespace grapheq
