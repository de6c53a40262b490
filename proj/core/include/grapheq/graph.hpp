#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grapheq {

using Vertex = std::uint32_t;

/// Upper bound on vertex count; larger graphs are outside the supported range.
inline constexpr std::size_t kMaxVertices = 65535;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n_vertices);
  /// Throws std::invalid_argument on self-loops, repeated edges or
  /// out-of-range endpoints.
  Graph(std::size_t n_vertices, std::vector<Edge> edges);
  Graph(std::size_t n_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return n_ == 0; }

  /// Edges in increasing (u, v) order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbours of v in increasing order.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;
  std::size_t max_degree() const noexcept;

  /// Labelled equality (same vertex count and identical edge set).
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Disjoint union; vertices of later graphs are shifted past earlier ones.
Graph disjoint_union(std::span<const Graph> parts);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Subgraph induced on the vertices with keep[v] == true, re-indexed densely
/// in increasing order of the original ids.
Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

/// G - v.
Graph delete_vertex(const Graph& g, Vertex v);
/// G - N[v].
Graph delete_closed_neighborhood(const Graph& g, Vertex v);
/// (G - e, G - (N(u) ∪ N(v))) for e = uv. Throws if e is not an edge.
std::pair<Graph, Graph> delete_edge_closure(const Graph& g, Edge e);

/// Vertex sets of the connected components, each sorted, ordered by smallest
/// vertex.
std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g);

/// Connected components as graphs, ordered by canonical key. Components too
/// large to canonicalize are placed last, by size and then smallest vertex.
std::vector<Graph> connected_components(const Graph& g);

bool is_connected(const Graph& g);
/// Connected with |E| == |V|.
bool is_unicyclic(const Graph& g);

/// Map degree -> number of vertices with that degree.
std::map<std::size_t, std::size_t> degree_histogram(const Graph& g);

/// "n; u-v, u-v, ..." text form, edges in increasing order.
std::string to_edge_list(const Graph& g);
/// Inverse of to_edge_list; whitespace-tolerant. Throws std::invalid_argument.
Graph parse_edge_list(std::string_view text);

}  // namespace grapheq
