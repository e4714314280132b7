#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/bits.hpp"

namespace hamspan {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Path = std::vector<Vertex>;

struct VertexTag {};
struct EdgeTag {};

/// Membership set over vertex ids 0..n-1.
using VertexSet = IndexSet<VertexTag>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored as (u, v) with u < v, sorted lexicographically, and edge
/// ids are their positions in that order. Two structurally equal graphs thus
/// have identical edge indexing. Neighbor lists are sorted ascending and carry
/// the id of the connecting edge alongside.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (const auto& e : pairs) {
      if (e.u >= n || e.v >= n)
        throw std::invalid_argument("vertex id out of range in edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") for n=" + std::to_string(n));
      if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
      g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    for (std::size_t i = 1; i < g.edges_.size(); ++i)
      if (g.edges_[i] == g.edges_[i - 1])
        throw std::invalid_argument("duplicate edge (" + std::to_string(g.edges_[i].u) + "," +
                                    std::to_string(g.edges_[i].v) + ")");
    g.build_adjacency();
    return g;
  }

  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }
  static Graph from_edge_list(std::size_t n, const std::vector<Edge>& pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  Edge edge(EdgeId id) const { return edges_.at(id); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbr_.data() + offset_[v], nbr_.data() + offset_[v + 1]};
  }
  /// Edge ids parallel to neighbors(v).
  std::span<const EdgeId> incident(Vertex v) const {
    return {nbr_edge_.data() + offset_[v], nbr_edge_.data() + offset_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offset_[v + 1] - offset_[v]; }

  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_ || u == v) return std::nullopt;
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return nbr_edge_[offset_[u] + static_cast<std::size_t>(it - nb.begin())];
  }
  bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    std::vector<std::size_t> deg(n_ + 1, 0);
    for (const auto& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    offset_.assign(n_ + 1, 0);
    for (std::size_t v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
    nbr_.resize(2 * edges_.size());
    nbr_edge_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
    // Lexicographic edge order makes every neighbor list come out sorted:
    // v's smaller neighbors arrive via edges (u, v) ordered by u, and those
    // precede all edges (v, w) in the global order.
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      nbr_[fill[e.u]] = e.v;
      nbr_edge_[fill[e.u]++] = id;
      nbr_[fill[e.v]] = e.u;
      nbr_edge_[fill[e.v]++] = id;
    }
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_{0};
  std::vector<Vertex> nbr_;
  std::vector<EdgeId> nbr_edge_;
};

// ---------------------------------------------------------------------------
// Neighborhood primitives

inline std::size_t degree_into(const Graph& g, Vertex v, const VertexSet& s) {
  std::size_t d = 0;
  for (Vertex w : g.neighbors(v))
    if (s.contains(w)) ++d;
  return d;
}

/// External neighborhood N_G(X): vertices outside X with a neighbor in X.
inline VertexSet external_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet out(g.order());
  x.for_each([&](std::size_t v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
      if (!x.contains(w)) out.insert(w);
  });
  return out;
}

/// Number of edges with both endpoints in a.
inline std::size_t edges_within(const Graph& g, const VertexSet& a) {
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if (a.contains(e.u) && a.contains(e.v)) ++c;
  return c;
}

/// Number of edges with one endpoint in a and the other in b (a, b disjoint).
inline std::size_t edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::size_t c = 0;
  for (const auto& e : g.edges())
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) ++c;
  return c;
}

inline std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  std::size_t d = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

struct Components {
  std::vector<std::size_t> label;  // per vertex
  std::size_t count = 0;
};

/// Connected components, labeled in order of their lowest vertex.
inline Components connected_components(const Graph& g) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  Components c{std::vector<std::size_t>(g.order(), unset), 0};
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (c.label[s] != unset) continue;
    c.label[s] = c.count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (c.label[w] == unset) {
          c.label[w] = c.count;
          stack.push_back(w);
        }
    }
    ++c.count;
  }
  return c;
}

inline bool is_connected(const Graph& g) { return connected_components(g).count <= 1; }

/// Vertices with deg(v) <= ln(n)/10, compared as reals.
inline VertexSet small_vertices(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("small_vertices requires n >= 2");
  const double threshold = std::log(static_cast<double>(g.order())) / 10.0;
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (static_cast<double>(g.degree(v)) <= threshold) s.insert(v);
  return s;
}

/// Shortest x-y path in g minus forbidden. Neighbors are expanded in
/// ascending id order, so ties resolve deterministically.
inline std::optional<Path> bfs_path(const Graph& g, Vertex x, Vertex y, const VertexSet& forbidden) {
  if (x >= g.order() || y >= g.order()) throw std::out_of_range("bfs_path endpoint out of range");
  if (forbidden.contains(x) || forbidden.contains(y))
    throw std::invalid_argument("bfs_path endpoint is forbidden");
  if (x == y) return Path{x};
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(g.order(), none);
  parent[x] = x;
  std::deque<Vertex> queue{x};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (parent[w] != none || forbidden.contains(w)) continue;
      parent[w] = v;
      if (w == y) {
        Path p{y};
        while (p.back() != x) p.push_back(parent[p.back()]);
        std::reverse(p.begin(), p.end());
        return p;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

/// Induced subgraph plus maps from the new ids back to the host's ids.
struct Restriction {
  Graph graph;
  std::vector<Vertex> vertex_map;  // new vertex -> original vertex
  std::vector<EdgeId> edge_map;    // new edge id -> original edge id
  std::vector<Vertex> inverse;     // original vertex -> new vertex (or npos)

  static constexpr Vertex npos = std::numeric_limits<Vertex>::max();

  Path lift(const Path& p) const {
    Path out;
    out.reserve(p.size());
    for (Vertex v : p) out.push_back(vertex_map.at(v));
    return out;
  }
};

/// G[keep] with the edges in drop_edges removed. Kept vertices are renumbered
/// in ascending original order.
inline Restriction restrict(const Graph& g, const VertexSet& keep,
                            const IndexSet<EdgeTag>& drop_edges) {
  if (keep.universe() != g.order()) throw std::invalid_argument("keep set has wrong universe");
  if (drop_edges.universe() != g.size()) throw std::invalid_argument("drop set has wrong universe");
  Restriction r;
  r.inverse.assign(g.order(), Restriction::npos);
  keep.for_each([&](std::size_t v) {
    r.inverse[v] = static_cast<Vertex>(r.vertex_map.size());
    r.vertex_map.push_back(static_cast<Vertex>(v));
  });
  std::vector<Edge> kept;
  for (EdgeId id = 0; id < g.size(); ++id) {
    const auto& e = g.edge(id);
    if (drop_edges.contains(id) || !keep.contains(e.u) || !keep.contains(e.v)) continue;
    kept.push_back({r.inverse[e.u], r.inverse[e.v]});
    r.edge_map.push_back(id);
  }
  // The relabeling is monotone, so kept edges are already in canonical order
  // and edge_map lines up with the new ids.
  r.graph = Graph::from_edge_list(r.vertex_map.size(), kept);
  return r;
}

inline Restriction restrict(const Graph& g, const VertexSet& keep) {
  return restrict(g, keep, IndexSet<EdgeTag>(g.size()));
}

// ---------------------------------------------------------------------------
// Path checks

/// True iff p is a simple path in g (consecutive vertices adjacent).
inline bool is_simple_path(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] >= g.order() || seen.contains(p[i])) return false;
    seen.insert(p[i]);
    if (i > 0 && !g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

/// True iff p visits every vertex of `cover` exactly once, nothing else, and
/// runs from x to y.
inline bool is_hamilton_path_of(const Graph& g, const Path& p, const VertexSet& cover, Vertex x,
                                Vertex y) {
  if (p.size() != cover.count() || p.front() != x || p.back() != y) return false;
  if (!is_simple_path(g, p)) return false;
  for (Vertex v : p)
    if (!cover.contains(v)) return false;
  return true;
}

inline bool is_hamilton_path(const Graph& g, const Path& p, Vertex x, Vertex y) {
  return !p.empty() && is_hamilton_path_of(g, p, VertexSet::full(g.order()), x, y);
}

}  // namespace hamspan
