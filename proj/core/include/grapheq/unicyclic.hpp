#pragma once

#include <optional>
#include <vector>

#include "grapheq/graph.hpp"

namespace grapheq {

inline constexpr unsigned kMaxUnboundedUnicyclic = 21;

/// sum over vertices of degree >= 3 of C(deg - 1, 2), minus the triangle
/// count. For a graph with |E| = |V| and no isolated vertex,
/// sum_v C(deg v, 2) - triangles = |V| + triangle_degree_excess.
long triangle_degree_excess(const Graph& g);

/// Connected unicyclic graphs on v vertices up to isomorphism, sorted by
/// canonical key. Each is a cycle C_c (3 <= c <= v) with a rooted tree hung at
/// every cycle vertex.
///
/// With max_excess set, only graphs whose triangle_degree_excess is at most
/// that value are produced (trees are pruned during generation), which allows
/// v up to the canonical labelling bound. Without it, 3 <= v <= 21.
/// Throws std::invalid_argument when v is out of range.
std::vector<Graph> enumerate_unicyclic(unsigned v, std::optional<long> max_excess = std::nullopt);

}  // namespace grapheq
