#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "grapheq/graph.hpp"

namespace grapheq {

/// Largest vertex count representable with the single-byte graph6 size field.
inline constexpr std::size_t kMaxGraph6Vertices = 62;

class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes a header-less graph6 string with n <= 62.
Graph parse_graph6(std::string_view s);

/// Encodes the labelled graph as graph6. Throws std::invalid_argument for
/// graphs with more than 62 vertices.
std::string emit_graph6(const Graph& g);

}  // namespace grapheq
