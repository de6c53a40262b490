#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grapheq/graph.hpp"

namespace grapheq {

/// Largest connected component the canonical labelling search accepts.
inline constexpr std::size_t kMaxCanonicalComponent = 64;

/// Upper bound on leaves visited by one component search before giving up.
inline constexpr std::size_t kCanonicalLeafBudget = 1u << 22;

class CanonicalizationRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Isomorphism-invariant encoding of a graph: equal keys iff isomorphic.
///
/// Layout: one block per connected component, blocks sorted bytewise. A block
/// is the component's vertex count (one byte) followed by the strict upper
/// triangle of its canonical adjacency matrix, row-major, packed MSB-first.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::string to_base64() const;
  /// Throws std::invalid_argument on malformed input.
  static CanonicalKey from_base64(std::string_view text);

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes_ <=> b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
};

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const noexcept;
};

/// Canonical labelling of a connected graph.
struct CanonicalForm {
  CanonicalKey key;
  /// order[p] is the original vertex placed at canonical position p.
  std::vector<Vertex> order;
};

/// Exact canonical form of one connected component: the lexicographically
/// least adjacency matrix over the leaves of an individualization-refinement
/// search started from the degree partition. Automorphisms found along the way
/// prune equivalent branches. Throws CanonicalizationRefused above
/// kMaxCanonicalComponent vertices or when the leaf budget is exhausted.
CanonicalForm canonical_form_connected(const Graph& component);

/// Per-component canonical key of an arbitrary graph.
CanonicalKey canonical_key(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Rebuilds the canonically labelled graph a key encodes (components laid out
/// in key order). Throws std::invalid_argument on a malformed key.
Graph graph_from_key(const CanonicalKey& key);

}  // namespace grapheq
