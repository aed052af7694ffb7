#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "vizlab/graph.hpp"

namespace vizlab {

/// graph6 decode failure; offset is the 0-based byte position at fault.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted; anything else beyond the encoded bits is an error.
Graph parse_graph6(std::string_view text);

/// Short header for n <= 62, the 4-byte form up to 258047 vertices.
std::string emit_graph6(const Graph& g);

}  // namespace vizlab
