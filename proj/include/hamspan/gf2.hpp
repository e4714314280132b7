#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamspan/graph.hpp"

namespace hamspan {

/// GF(2) vector over a host graph's edge ids. universe() is the host's m.
using EdgeVector = IndexSet<EdgeTag>;

/// <a, b> = |a AND b| mod 2.
inline bool intersection_parity(const EdgeVector& a, const EdgeVector& b) {
  return a.intersection_count(b) % 2 == 1;
}

/// |a| mod 2. Not the same thing as is_even_subgraph.
inline bool support_parity(const EdgeVector& a) { return a.count() % 2 == 1; }

inline EdgeVector edge_vector_of(const Graph& g, std::initializer_list<Edge> edges) {
  EdgeVector v(g.size());
  for (const auto& e : edges) {
    auto id = g.edge_id(e.u, e.v);
    if (!id) throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") not in graph");
    v.insert(*id);
  }
  return v;
}

/// Edge vector of the walk p (consecutive pairs); closes it when `closed`.
inline EdgeVector edge_vector_of_walk(const Graph& g, const Path& p, bool closed) {
  EdgeVector v(g.size());
  auto add = [&](Vertex a, Vertex b) {
    auto id = g.edge_id(a, b);
    if (!id) throw std::invalid_argument("walk uses a non-edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    v.flip(*id);
  };
  for (std::size_t i = 1; i < p.size(); ++i) add(p[i - 1], p[i]);
  if (closed && p.size() > 2) add(p.back(), p.front());
  return v;
}

/// Degree of every vertex in the subgraph spanned by v.
inline std::vector<std::size_t> subgraph_degrees(const Graph& g, const EdgeVector& v) {
  if (g.size() != v.universe()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::size_t> deg(g.order(), 0);
  v.for_each([&](std::size_t id) {
    ++deg[g.edge(static_cast<EdgeId>(id)).u];
    ++deg[g.edge(static_cast<EdgeId>(id)).v];
  });
  return deg;
}

/// Every vertex has even degree in v (v is in the cycle space).
inline bool is_even_subgraph(const Graph& g, const EdgeVector& v) {
  for (auto d : subgraph_degrees(g, v))
    if (d % 2) return false;
  return true;
}

// Hex form: digit i holds bits 4i..4i+3 with bit 4i as its least significant
// bit; digits run in increasing i, so the most significant nibble comes last.
inline std::string to_hex(const EdgeVector& v) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out((v.universe() + 3) / 4, '0');
  v.for_each([&](std::size_t i) {
    auto& c = out[i / 4];
    unsigned d = static_cast<unsigned>(std::string_view(digits).find(c));
    c = digits[d | (1u << (i % 4))];
  });
  return out;
}

inline EdgeVector from_hex(std::string_view hex, std::size_t m) {
  if (hex.size() != (m + 3) / 4)
    throw std::invalid_argument("hex length " + std::to_string(hex.size()) + " does not match m=" + std::to_string(m));
  EdgeVector v(m);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[i];
    unsigned d;
    if (c >= '0' && c <= '9') d = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') d = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') d = static_cast<unsigned>(c - 'A' + 10);
    else throw std::invalid_argument("bad hex digit");
    for (unsigned b = 0; b < 4; ++b)
      if (d & (1u << b)) {
        if (4 * i + b >= m) throw std::invalid_argument("hex sets bits beyond m");
        v.insert(4 * i + b);
      }
  }
  return v;
}

/// Incremental row-echelon basis over GF(2).
///
/// Each row's pivot is its lowest set bit, and no row contains the pivot bit of
/// a row inserted before it. Reduction scans bits in ascending order, so one
/// pass clears every pivot position.
class Gf2Basis {
 public:
  enum class Outcome { extended, absorbed };
  struct InsertResult {
    Outcome outcome;
    EdgeVector residual;
  };

  explicit Gf2Basis(std::size_t dimension)
      : dim_(dimension), pivot_mask_(dimension), pivot_row_(dimension, npos) {}

  std::size_t dimension() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<EdgeVector>& rows() const { return rows_; }
  /// Pivot bit of row i.
  std::size_t pivot(std::size_t i) const { return pivots_.at(i); }

  EdgeVector reduce(EdgeVector v) const {
    pivot_mask_.check_same(v);
    auto& w = v.words();
    const auto& mask = pivot_mask_.words();
    for (std::size_t wi = 0; wi < w.size(); ++wi) {
      std::uint64_t hit;
      while ((hit = w[wi] & mask[wi]) != 0) {
        std::size_t bit = wi * 64 + static_cast<std::size_t>(std::countr_zero(hit));
        const auto& row = rows_[pivot_row_[bit]].words();
        for (std::size_t k = wi; k < w.size(); ++k) w[k] ^= row[k];
      }
    }
    return v;
  }

  InsertResult insert(const EdgeVector& v) {
    EdgeVector r = reduce(v);
    if (r.empty()) return {Outcome::absorbed, std::move(r)};
    std::size_t p = r.next(0);
    pivot_row_[p] = rows_.size();
    pivot_mask_.insert(p);
    pivots_.push_back(p);
    rows_.push_back(r);
    return {Outcome::extended, std::move(r)};
  }

  bool in_span(const EdgeVector& v) const { return reduce(v).empty(); }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::size_t dim_;
  EdgeVector pivot_mask_;
  std::vector<std::size_t> pivot_row_;
  std::vector<std::size_t> pivots_;
  std::vector<EdgeVector> rows_;
};

/// Rank of a family of vectors by one batch elimination.
inline std::size_t gf2_rank(std::vector<EdgeVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.front().universe();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].contains(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].contains(col)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

/// Basis of {x : <x, row> = 0 for every row}, the orthogonal complement of the
/// span of `rows` inside GF(2)^m. One vector per free column of the reduced
/// row echelon form.
inline std::vector<EdgeVector> orthogonal_complement(std::vector<EdgeVector> rows, std::size_t m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !rows[sel].contains(col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && rows[i].contains(col)) rows[i] ^= rows[rank];
    pivot_cols.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  EdgeVector is_pivot(m);
  for (auto c : pivot_cols) is_pivot.insert(c);
  std::vector<EdgeVector> kernel;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot.contains(f)) continue;
    EdgeVector k(m);
    k.insert(f);
    for (std::size_t i = 0; i < rank; ++i)
      if (rows[i].contains(f)) k.insert(pivot_cols[i]);
    kernel.push_back(std::move(k));
  }
  return kernel;
}

// ---------------------------------------------------------------------------
// Cycle space and cut space

/// BFS spanning forest rooted at the lowest vertex of each component,
/// neighbors expanded in ascending order.
struct SpanningForest {
  static constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent;        // none for roots
  std::vector<EdgeId> parent_edge;   // valid when parent != none
  std::vector<std::size_t> depth;
  EdgeVector tree_edges;
  std::size_t components = 0;
};

inline SpanningForest bfs_forest(const Graph& g) {
  SpanningForest f;
  f.parent.assign(g.order(), SpanningForest::none);
  f.parent_edge.assign(g.order(), 0);
  f.depth.assign(g.order(), 0);
  f.tree_edges = EdgeVector(g.size());
  std::vector<bool> seen(g.order(), false);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    ++f.components;
    seen[root] = true;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      auto nb = g.neighbors(v);
      auto ids = g.incident(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        Vertex w = nb[i];
        if (seen[w]) continue;
        seen[w] = true;
        f.parent[w] = v;
        f.parent_edge[w] = ids[i];
        f.depth[w] = f.depth[v] + 1;
        f.tree_edges.insert(ids[i]);
        queue.push_back(w);
      }
    }
  }
  return f;
}

/// Dimension of the cycle space, m - n + c.
inline std::size_t cycle_space_dimension(const Graph& g) {
  return g.size() + connected_components(g).count - g.order();
}

/// Tree path edges between u and v in the forest, XORed into out.
inline void add_tree_path(const SpanningForest& f, Vertex u, Vertex v, EdgeVector& out) {
  while (u != v) {
    if (f.depth[u] < f.depth[v]) std::swap(u, v);
    out.flip(f.parent_edge[u]);
    u = f.parent[u];
  }
}

/// Fundamental cycles of the BFS forest, one per non-tree edge in edge-id
/// order: the non-tree edge plus the tree path between its endpoints.
inline std::vector<EdgeVector> cycle_space_basis(const Graph& g) {
  auto f = bfs_forest(g);
  std::vector<EdgeVector> basis;
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (f.tree_edges.contains(id)) continue;
    EdgeVector c(g.size());
    c.insert(id);
    add_tree_path(f, g.edge(id).u, g.edge(id).v, c);
    basis.push_back(std::move(c));
  }
  return basis;
}

/// The star of v, ∂(v) = {vw : w ∈ N(v)}.
inline EdgeVector star(const Graph& g, Vertex v) {
  EdgeVector s(g.size());
  for (EdgeId id : g.incident(v)) s.insert(id);
  return s;
}

/// All n vertex stars; they generate the cut space.
inline std::vector<EdgeVector> cut_space_stars(const Graph& g) {
  std::vector<EdgeVector> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(star(g, v));
  return out;
}

/// The cut E_G(A, V \ A), i.e. the XOR of the stars over A.
inline EdgeVector cut_of(const Graph& g, const VertexSet& a) {
  EdgeVector c(g.size());
  for (EdgeId id = 0; id < g.size(); ++id)
    if (a.contains(g.edge(id).u) != a.contains(g.edge(id).v)) c.insert(id);
  return c;
}

}  // namespace hamspan
