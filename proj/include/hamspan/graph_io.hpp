#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamspan/graph.hpp"

namespace hamspan {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6: size header N(n) followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte, most significant first, each byte offset by 63.

namespace detail {

inline void put_graph6_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else if (n <= 68719476735ULL) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    throw std::invalid_argument("graph too large for graph6");
  }
}

inline unsigned graph6_value(char c) {
  auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw FormatError("graph6: byte outside 63..126");
  return u - 63;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  std::string out;
  const std::size_t n = g.order();
  detail::put_graph6_size(out, n);
  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const auto& e : g.edges()) {
    // Column-major position of (u, v), u < v.
    std::size_t k = static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (auto b : packed) out.push_back(static_cast<char>(63 + b));
  return out;
}

inline Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = detail::graph6_value(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw FormatError("graph6: truncated 8-byte size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | detail::graph6_value(text[i]);
    pos = 8;
  } else {
    if (text.size() < 4) throw FormatError("graph6: truncated 4-byte size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | detail::graph6_value(text[i]);
    pos = 4;
  }

  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected)
    throw FormatError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                      std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++k) {
      unsigned byte = detail::graph6_value(text[pos + k / 6]);
      if (byte & (1u << (5 - k % 6))) edges.push_back({u, v});
    }
  if (k % 6) {
    unsigned last = detail::graph6_value(text[pos + k / 6]);
    if (last & ((1u << (6 - k % 6)) - 1)) throw FormatError("graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

/// Plain edge list: "n m" on the first line, then m lines "u v".
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

inline Graph read_edge_list(std::istream& is) {
  std::size_t n = 0, m = 0;
  if (!(is >> n >> m)) throw FormatError("edge list: missing 'n m' header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(is >> u >> v)) throw FormatError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0) throw FormatError("edge list: negative vertex id");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string trailing;
  if (is >> trailing) throw FormatError("edge list: trailing data after " + std::to_string(m) + " edges");
  return Graph::from_edge_list(n, edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

/// DOT export; highlighted edges (if any) are drawn bold red.
inline std::string to_dot(const Graph& g, const IndexSet<EdgeTag>* highlight = nullptr) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (EdgeId id = 0; id < g.size(); ++id) {
    const auto& e = g.edge(id);
    os << "  " << e.u << " -- " << e.v;
    if (highlight && highlight->contains(id)) os << " [color=red, penwidth=2]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hamspan
