#include "vizlab/graph6.hpp"

namespace vizlab {

namespace {

constexpr int kBias = 63;
constexpr char kLongHeader = 126;  // '~'
constexpr std::string_view kFileHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("character out of graph6 range", pos);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t base = 0;
  if (text.starts_with(kFileHeader)) base = kFileHeader.size();
  if (base >= text.size()) throw ParseError("missing length header", base);

  std::size_t pos = base;
  std::size_t n = 0;
  if (text[pos] == kLongHeader) {
    if (pos + 1 < text.size() && text[pos + 1] == kLongHeader) {
      throw ParseError("8-byte length header not supported", pos);
    }
    for (int i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos + i));
    if (n < 63) throw ParseError("long length header used for fewer than 63 vertices", pos);
    pos += 4;
  } else {
    n = static_cast<std::size_t>(sextet(text, pos));
    pos += 1;
  }

  Graph g(n);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body) throw ParseError("truncated edge data", text.size());
  if (text.size() - pos > body) throw ParseError("trailing garbage", pos + body);

  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++bit) {
      const int chunk = sextet(text, pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (bit % 6 != 0) {
    const int chunk = sextet(text, pos + bit / 6);
    if (chunk & ((1 << (6 - bit % 6)) - 1)) throw ParseError("nonzero padding bits", pos + bit / 6);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kLongHeader);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  } else {
    throw SizeError("graph6 output supports at most 258047 vertices");
  }

  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace vizlab
