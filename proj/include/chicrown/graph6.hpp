#pragma once

// graph6 text codec (short form, n <= 64) and a minimal DIMACS ".col" reader
// for ad-hoc fixtures.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chicrown/graph.hpp"

namespace chicrown {

namespace detail {

inline std::size_t graph6_data_bytes(int n) {
  std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

/// Parses one graph6 line. Accepts the single-byte header for n <= 62 and the
/// '~'-prefixed 4-byte header; anything above 64 vertices is rejected.
inline Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw FormatError("empty graph6 line", 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw FormatError("byte outside the graph6 range 63..126", i);
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw UnsupportedSize("8-byte graph6 header implies n > 64");
    if (text.size() < 4) throw FormatError("truncated extended graph6 header", text.size());
    long big = 0;
    for (std::size_t i = 1; i <= 3; ++i) big = (big << 6) | (text[i] - 63);
    if (big > Graph::kMaxVertices)
      throw UnsupportedSize("graph6 header declares n=" + std::to_string(big) + " > 64");
    n = static_cast<int>(big);
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }

  std::size_t need = detail::graph6_data_bytes(n);
  if (text.size() - pos < need)
    throw FormatError("truncated graph6 bit field", text.size());
  if (text.size() - pos > need)
    throw FormatError("trailing bytes after graph6 bit field", pos + need);

  std::vector<std::pair<int, int>> edges;
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      int byte = static_cast<int>(text[pos + bit / 6]) - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
    }
  }
  // remaining pad bits must be zero
  std::size_t total_bits = need * 6;
  for (std::size_t b = bit; b < total_bits; ++b) {
    int byte = static_cast<int>(text[pos + b / 6]) - 63;
    if ((byte >> (5 - b % 6)) & 1)
      throw FormatError("nonzero padding bits in graph6 line", pos + b / 6);
  }
  return Graph::from_edges(n, edges);
}

/// Writes the canonical short-form encoding: single-byte header up to n = 62,
/// 4-byte header for 63 and 64. Round-trips through parse_graph6 bit-exactly.
inline std::string write_graph6(const Graph& g) {
  int n = g.n();
  if (n > Graph::kMaxVertices) throw UnsupportedSize("graph6 output limited to n <= 64");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  std::size_t need = detail::graph6_data_bytes(n);
  std::string data(need, '\0');
  std::size_t bit = 0;
  for (int col = 1; col < n; ++col)
    for (int row = 0; row < col; ++row, ++bit)
      if (g.adjacent(row, col)) data[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
  for (char& c : data) c = static_cast<char>(c + 63);
  return out + data;
}

/// DIMACS ".col" reader: "p edge n m" then "e u v" lines, 1-indexed vertices.
/// Offsets in FormatError refer to line numbers (1-based).
inline Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string kind;
      long nn = -1, mm = -1;
      ls >> kind >> nn >> mm;
      if (kind != "edge" && kind != "col")
        throw FormatError("expected 'p edge n m'", lineno);
      if (nn < 0 || mm < 0) throw FormatError("bad problem line", lineno);
      if (nn > Graph::kMaxVertices)
        throw UnsupportedSize("DIMACS graph declares n=" + std::to_string(nn) + " > 64");
      n = static_cast<int>(nn);
    } else if (tag == "e") {
      long u = 0, v = 0;
      if (!(ls >> u >> v)) throw FormatError("bad edge line", lineno);
      if (n < 0) throw FormatError("edge line before problem line", lineno);
      if (u < 1 || v < 1 || u > n || v > n)
        throw FormatError("edge endpoint out of range", lineno);
      if (u == v) throw FormatError("self-loop edge", lineno);
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else {
      throw FormatError("unrecognized DIMACS line '" + tag + "'", lineno);
    }
  }
  if (n < 0) throw FormatError("missing 'p edge' line", lineno);
  return Graph::from_edges(n, edges);
}

}  // namespace chicrown
