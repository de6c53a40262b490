#include "grapheq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "grapheq/canonical.hpp"

namespace grapheq {

Graph::Graph(std::size_t n_vertices) : n_(n_vertices), adj_(n_vertices) {
  if (n_vertices > kMaxVertices) throw std::invalid_argument("graph has too many vertices");
}

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)), adj_(n_vertices) {
  if (n_vertices > kMaxVertices) throw std::invalid_argument("graph has too many vertices");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n_) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) + " out of range");
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw std::invalid_argument("repeated edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v));
    }
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(std::size_t n_vertices, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n_vertices, [&] {
        std::vector<Edge> out;
        out.reserve(edges.size());
        for (auto [a, b] : edges) out.emplace_back(a, b);
        return out;
      }()) {}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& nb : adj_) best = std::max(best, nb.size());
  return best;
}

Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  std::vector<Edge> edges;
  for (const Graph& g : parts) {
    const auto shift = static_cast<Vertex>(n);
    for (const Edge& e : g.edges()) edges.emplace_back(e.u + shift, e.v + shift);
    n += g.vertex_count();
  }
  return Graph(n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return disjoint_union(std::span<const Graph>(parts));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel: size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), std::move(edges));
}

Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> index(n, 0);
  Vertex next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (keep[v]) index[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(next, std::move(edges));
}

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

Graph delete_vertex(const Graph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<bool> keep(g.vertex_count(), true);
  keep[v] = false;
  return induced_subgraph(g, keep);
}

Graph delete_closed_neighborhood(const Graph& g, Vertex v) {
  check_vertex(g, v);
  std::vector<bool> keep(g.vertex_count(), true);
  keep[v] = false;
  for (Vertex w : g.neighbors(v)) keep[w] = false;
  return induced_subgraph(g, keep);
}

std::pair<Graph, Graph> delete_edge_closure(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) {
    throw std::invalid_argument("not an edge: " + std::to_string(e.u) + "-" + std::to_string(e.v));
  }
  std::vector<Edge> rest;
  rest.reserve(g.edge_count() - 1);
  for (const Edge& f : g.edges()) {
    if (f != e) rest.push_back(f);
  }
  std::vector<bool> keep(g.vertex_count(), true);
  for (Vertex w : g.neighbors(e.u)) keep[w] = false;
  for (Vertex w : g.neighbors(e.v)) keep[w] = false;
  return {Graph(g.vertex_count(), std::move(rest)), induced_subgraph(g, keep)};
}

std::vector<std::vector<Vertex>> component_vertex_sets(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Graph> connected_components(const Graph& g) {
  struct Entry {
    Graph graph;
    std::optional<CanonicalKey> key;
    Vertex first;
  };
  std::vector<Entry> entries;
  for (auto& vs : component_vertex_sets(g)) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (Vertex v : vs) keep[v] = true;
    Graph comp = induced_subgraph(g, keep);
    std::optional<CanonicalKey> key;
    if (comp.vertex_count() <= kMaxCanonicalComponent) key = canonical_key(comp);
    entries.push_back({std::move(comp), std::move(key), vs.front()});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.key && b.key) return *a.key < *b.key;
    if (a.key != b.key) return a.key.has_value();
    if (a.graph.vertex_count() != b.graph.vertex_count()) {
      return a.graph.vertex_count() < b.graph.vertex_count();
    }
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.graph));
  return out;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && component_vertex_sets(g).size() == 1;
}

bool is_unicyclic(const Graph& g) { return g.edge_count() == g.vertex_count() && is_connected(g); }

std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ++hist[g.degree(v)];
  return hist;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ';';
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? " " : ", ") << e.u << '-' << e.v;
    first = false;
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("edge list: bad " + std::string(what) + " '" + std::string(s) +
                                "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("edge list: expected 'n; u-v, ...'");
  }
  const std::size_t n = parse_count(text.substr(0, semi), "vertex count");
  std::vector<Edge> edges;
  std::string_view rest = trim(text.substr(semi + 1));
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("edge list: bad edge '" + std::string(item) + "'");
    }
    const auto a = parse_count(item.substr(0, dash), "endpoint");
    const auto b = parse_count(item.substr(dash + 1), "endpoint");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (comma == std::string_view::npos) break;
    rest = trim(rest.substr(comma + 1));
    if (rest.empty()) throw std::invalid_argument("edge list: trailing comma");
  }
  return Graph(n, std::move(edges));
}

}  // namespace grapheq
