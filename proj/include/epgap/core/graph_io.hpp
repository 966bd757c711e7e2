#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "epgap/core/graph.hpp"
#include "epgap/core/rng.hpp"

namespace epgap {

// graph6: size header N(n) (one byte 63+n for n <= 62, otherwise '~' and three 6-bit
// bytes), then the upper triangle of the adjacency matrix read column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed 6 bits per byte, padded with zeros,
// each byte offset by 63.

inline std::string write_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw ParameterError("graph6: n too large");
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  const std::size_t base = 0;
  auto value_at = [&](std::size_t i) {
    if (i >= text.size()) throw ParseError("graph6: truncated input", base + i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + i);
    return c - 63;
  };
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  std::size_t pos = 0;
  int n = value_at(0);
  pos = 1;
  if (n == 63) {
    if (text.size() > 1 && text[1] == '~') throw ParseError("graph6: 8-byte size header not supported", 1);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | value_at(pos++);
  }
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != pos + bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                         std::to_string(text.size() - pos),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value_at(pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = value_at(pos + bytes - 1);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", pos + bytes - 1);
  }
  return Graph(n, edges);
}

/// Plain edge list: "n m" header, then one "u v" line per edge (0-indexed).
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header", 0);
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(is >> u >> v)) {
      throw ParseError("edge list: missing edge " + std::to_string(i), static_cast<std::size_t>(is.tellg()));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range", i);
    if (u == v) throw ParseError("edge list: loop", i);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (is >> rest) throw ParseError("edge list: trailing data", static_cast<std::size_t>(is.tellg()));
  return Graph(static_cast<int>(n), edges);
}

/// Reads either format: an edge list starts with a digit, graph6 never does.
inline Graph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' || text[i] == '\r')) ++i;
  text.remove_prefix(i);
  if (!text.empty() && text[0] >= '0' && text[0] <= '9') return parse_edge_list(text);
  const std::size_t eol = text.find('\n');
  return parse_graph6(text.substr(0, eol));
}

inline std::string write_dot(const Graph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

/// Integrity hash used in JSON certificates: FNV-1a over the edge-list text, hex encoded.
inline std::string graph_hash(const Graph& g) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(write_edge_list(g))));
  return buf;
}

}  // namespace epgap
