#include "grapheq/graph6.hpp"

#include <vector>

namespace grapheq {

// Bit order: for j = 1..n-1, for i = 0..j-1, bit x(i, j); six bits per byte,
// most significant first, each byte offset by 63.

Graph parse_graph6(std::string_view s) {
  if (s.empty()) throw Graph6Error("graph6: empty input", 0);
  const unsigned char head = static_cast<unsigned char>(s[0]);
  if (head < 63 || head > 126) throw Graph6Error("graph6: invalid size byte", 0);
  if (head == 126) throw Graph6Error("graph6: multi-byte size field not supported", 0);
  const std::size_t n = head - 63;
  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (s.size() != expected) {
    throw Graph6Error(
        "graph6: expected " + std::to_string(expected) + " bytes, got " + std::to_string(s.size()),
        std::min(s.size(), expected));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const std::size_t at = 1 + bit / 6;
      const unsigned char c = static_cast<unsigned char>(s[at]);
      if (c < 63 || c > 126) throw Graph6Error("graph6: invalid character", at);
      if (((c - 63) >> (5 - bit % 6)) & 1u) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  for (std::size_t at = 1; at < s.size(); ++at) {
    const unsigned char c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw Graph6Error("graph6: invalid character", at);
  }
  if (bits % 6 != 0) {
    const unsigned char c = static_cast<unsigned char>(s.back());
    if (((c - 63) & ((1u << (6 - bits % 6)) - 1)) != 0) {
      throw Graph6Error("graph6: nonzero padding bits", s.size() - 1);
    }
  }
  return Graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxGraph6Vertices) {
    throw std::invalid_argument("graph6: more than 62 vertices is not supported");
  }
  std::string out;
  out += static_cast<char>(63 + n);
  unsigned cur = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      cur = (cur << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(63 + cur);
        cur = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>(63 + (cur << (6 - filled)));
  return out;
}

}  // namespace grapheq
