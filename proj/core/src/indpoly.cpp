#include "grapheq/indpoly.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "grapheq/canonical.hpp"

namespace grapheq {

namespace {

using Mask = std::uint32_t;

// Walks every subset containing no edge, extending masks in increasing vertex
// order; `allowed` holds the vertices above the last one chosen that are not
// adjacent to any chosen vertex.
void count_independent(const std::vector<Mask>& nbr, int n, int from, Mask allowed, int size,
                       std::vector<unsigned long long>& counts) {
  ++counts[size];
  for (int v = from; v < n; ++v) {
    const Mask bit = Mask{1} << v;
    if (allowed & bit) count_independent(nbr, n, v + 1, allowed & ~nbr[v] & ~bit, size + 1, counts);
  }
}

IntPoly connected_indpoly(const Graph& comp, PolyCache& cache);

IntPoly product_over_components(const Graph& g, PolyCache& cache) {
  IntPoly result{1};
  for (const auto& vs : component_vertex_sets(g)) {
    if (vs.size() == 1) {
      result *= IntPoly{1, 1};
      continue;
    }
    std::vector<bool> keep(g.vertex_count(), false);
    for (Vertex v : vs) keep[v] = true;
    result *= connected_indpoly(induced_subgraph(g, keep), cache);
  }
  return result;
}

IntPoly connected_indpoly(const Graph& comp, PolyCache& cache) {
  CanonicalForm form = canonical_form_connected(comp);
  if (auto hit = cache.find(form.key)) return *std::move(hit);

  Vertex pivot = form.order.front();
  for (Vertex v : form.order) {
    if (comp.degree(v) > comp.degree(pivot)) pivot = v;
  }
  IntPoly result =
      product_over_components(delete_vertex(comp, pivot), cache) +
      IntPoly::x() * product_over_components(delete_closed_neighborhood(comp, pivot), cache);
  cache.insert(form.key, result);
  return result;
}

}  // namespace

IntPoly indpoly_bruteforce(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxBruteForceVertices) {
    throw std::invalid_argument(
        "brute-force independence polynomial refused: " + std::to_string(n) +
        " vertices exceeds the limit of " + std::to_string(kMaxBruteForceVertices));
  }
  std::vector<Mask> nbr(n, 0);
  for (const Edge& e : g.edges()) {
    nbr[e.u] |= Mask{1} << e.v;
    nbr[e.v] |= Mask{1} << e.u;
  }
  std::vector<unsigned long long> counts(n + 1, 0);
  const Mask all = (Mask{1} << n) - 1;
  count_independent(nbr, static_cast<int>(n), 0, all, 0, counts);
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) coeffs.emplace_back(std::to_string(c));
  return IntPoly(std::move(coeffs));
}

IntPoly indpoly(const Graph& g, PolyCache& cache) { return product_over_components(g, cache); }

IntPoly indpoly(const Graph& g) {
  PolyCache cache;
  return indpoly(g, cache);
}

bool indpoly_edge_rule_check(const Graph& g, Edge e, PolyCache& cache) {
  auto [minus_edge, minus_closure] = delete_edge_closure(g, e);
  const IntPoly via_edge =
      indpoly(minus_edge, cache) - IntPoly::monomial(1, 2) * indpoly(minus_closure, cache);
  return via_edge == indpoly(g, cache);
}

bool indpoly_edge_rule_check(const Graph& g, Edge e) {
  PolyCache cache;
  return indpoly_edge_rule_check(g, e, cache);
}

std::size_t independence_number(const Graph& g, PolyCache& cache) {
  return indpoly(g, cache).degree().value_or(0);
}

std::size_t independence_number(const Graph& g) {
  PolyCache cache;
  return independence_number(g, cache);
}

}  // namespace grapheq
