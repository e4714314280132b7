#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/linkage.hpp"

namespace hamspan {

/// Even cycle v_1..v_2k (cycle[j] = v_{j+1}) with an odd number of R-edges,
/// plus paths P_i from v_i to v_{2k-i+2} for i = 2..k (paths[i-2]). Path
/// interiors avoid V(C) and each other.
struct ParitySwitcher {
  Path cycle;
  std::vector<Path> paths;

  std::size_t k() const { return cycle.size() / 2; }
  /// Endpoints of P_i: (v_i, v_{2k-i+2}).
  std::pair<Vertex, Vertex> pair(std::size_t i) const { return {cycle[i - 1], cycle[2 * k() - i + 1]}; }
};

/// Edges of C together with all path edges: the edge set of the switcher graph W.
inline EdgeVector switcher_edges(const Graph& g, const ParitySwitcher& w) {
  EdgeVector e = edge_vector_of_walk(g, w.cycle, true);
  for (const auto& p : w.paths) e |= edge_vector_of_walk(g, p, false);
  return e;
}

inline VertexSet switcher_vertices(const Graph& g, const ParitySwitcher& w) {
  VertexSet s(g.order());
  for (Vertex v : w.cycle) s.insert(v);
  for (const auto& p : w.paths)
    for (Vertex v : p) s.insert(v);
  return s;
}

/// Throws std::invalid_argument naming the first violated switcher invariant.
inline void validate_switcher(const Graph& g, const ParitySwitcher& w, const EdgeVector& r) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("malformed switcher: " + what); };
  const std::size_t len = w.cycle.size();
  if (len < 4 || len % 2) fail("cycle length must be even and at least 4");
  if (!is_simple_path(g, w.cycle) || !g.adjacent(w.cycle.back(), w.cycle.front())) fail("cycle is not a simple cycle of g");
  const EdgeVector c = edge_vector_of_walk(g, w.cycle, true);
  if (!intersection_parity(c, r)) fail("cycle has an even number of R-edges");
  if (w.paths.size() != w.k() - 1) fail("expected k-1 connector paths");
  VertexSet used(g.order());
  for (Vertex v : w.cycle) used.insert(v);
  for (std::size_t i = 2; i <= w.k(); ++i) {
    const Path& p = w.paths[i - 2];
    auto [a, b] = w.pair(i);
    if (p.size() < 2 || p.front() != a || p.back() != b) fail("P_" + std::to_string(i) + " has wrong endpoints");
    if (!is_simple_path(g, p)) fail("P_" + std::to_string(i) + " is not a simple path");
    if (edge_vector_of_walk(g, p, false).intersects(c)) fail("P_" + std::to_string(i) + " shares an edge with C");
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (used.contains(p[j])) fail("P_" + std::to_string(i) + " meets C or another path");
      used.insert(p[j]);
    }
  }
}

/// The two zig-zag Hamilton paths of W from v_1 to v_{k+1}, returned as
/// (even R-parity, odd R-parity).
///
/// A: v_1 v_2 ~P_2~ v_2k v_2k-1 ~P_3~ v_3 v_4 ... v_{k+1}
/// B: v_1 v_2k ~P_2~ v_2 v_3 ~P_3~ v_2k-1 v_2k-2 ... v_{k+1}
/// Together they use every path edge twice and every cycle edge once, so
/// E(A) xor E(B) = E(C), and an odd |E(C) ∩ R| separates their parities.
inline std::pair<Path, Path> hamilton_paths_of_switcher(const Graph& g, const ParitySwitcher& w, const EdgeVector& r) {
  validate_switcher(g, w, r);
  const std::size_t k = w.k();
  auto zigzag = [&](bool enter_left) {
    Path out{w.cycle[0]};
    for (std::size_t i = 2; i <= k; ++i) {
      Path p = w.paths[i - 2];
      if (!enter_left) std::reverse(p.begin(), p.end());
      out.insert(out.end(), p.begin(), p.end());
      enter_left = !enter_left;
    }
    out.push_back(w.cycle[k]);
    return out;
  };
  Path a = zigzag(true), b = zigzag(false);
  const EdgeVector ea = edge_vector_of_walk(g, a, false), eb = edge_vector_of_walk(g, b, false);
  const VertexSet cover = switcher_vertices(g, w);
  if (!is_hamilton_path_of(g, a, cover, w.cycle[0], w.cycle[k]) || !is_hamilton_path_of(g, b, cover, w.cycle[0], w.cycle[k]) ||
      (ea ^ eb) != edge_vector_of_walk(g, w.cycle, true))
    throw std::logic_error("switcher zig-zag paths failed verification");
  if (intersection_parity(ea, r)) return {std::move(b), std::move(a)};
  return {std::move(a), std::move(b)};
}

// ---------------------------------------------------------------------------
// Switcher cycles

/// Even simple cycle whose only non-R edge is the closing edge
/// cycle.back()-cycle.front().
struct SwitcherCycle {
  Path cycle;
  EdgeVector vector;
  EdgeId non_r_edge = 0;
};

struct SwitcherSearchOptions {
  /// Vertices the cycle may not use.
  std::optional<VertexSet> avoid;
  /// SMALL set for the adjacency conditions; small_vertices(g) when unset.
  std::optional<VertexSet> small;
  /// Node budget for the simple-path fallback, per seed edge.
  std::uint64_t dfs_budget = 200'000;
};

/// 22·ln n / ln ln n for n >= 10; no cap below.
inline std::optional<std::size_t> switcher_cycle_cap(std::size_t n) {
  if (n < 10) return std::nullopt;
  const double ln = std::log(static_cast<double>(n));
  return static_cast<std::size_t>(std::floor(22.0 * ln / std::log(ln)));
}

/// Conditions on SMALL vertices: deg(u, V(C)) <= 2 for u on C and <= 1 for u off C.
inline bool small_adjacency_ok(const Graph& g, const Path& cycle, const VertexSet& small) {
  VertexSet on(g.order());
  for (Vertex v : cycle) on.insert(v);
  bool ok = true;
  small.for_each([&](std::size_t u) {
    std::size_t d = degree_into(g, static_cast<Vertex>(u), on);
    if (d > (on.contains(u) ? 2u : 1u)) ok = false;
  });
  return ok;
}

namespace detail {

/// Shortest even switcher cycle through the non-R edge xy, or nullopt.
/// Odd-length R-walks x->y come from BFS on the parity double cover; if the
/// shortest one repeats a vertex, a DFS over simple paths pruned by the
/// double-cover distance finds the shortest simple one within max_len.
inline std::optional<Path> switcher_cycle_through(const Graph& g, const EdgeVector& r, Vertex x, Vertex y,
                                                  const VertexSet& avoid, std::size_t max_len, std::uint64_t dfs_budget) {
  const std::size_t n = g.order();
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  // dist[2v+p]: shortest R-walk from (v, p) to (y, 1), p = parity of steps taken so far.
  std::vector<std::size_t> dist(2 * n, inf);
  dist[2 * y + 1] = 0;
  std::deque<std::size_t> queue{2 * std::size_t{y} + 1};
  while (!queue.empty()) {
    std::size_t s = queue.front();
    queue.pop_front();
    auto v = static_cast<Vertex>(s / 2);
    auto nb = g.neighbors(v);
    auto ids = g.incident(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!r.contains(ids[i]) || avoid.contains(nb[i])) continue;
      std::size_t t = 2 * nb[i] + ((s & 1) ^ 1);
      if (dist[t] != inf) continue;
      dist[t] = dist[s] + 1;
      queue.push_back(t);
    }
  }
  const std::size_t shortest = dist[2 * x];
  // The path has max_len - 1 edges at most; the closing edge adds one.
  if (shortest == inf || shortest + 1 > max_len) return std::nullopt;

  // Greedy descent along the distance labels gives a shortest odd walk.
  Path walk{x};
  std::size_t state = 2 * x;
  while (dist[state] != 0) {
    auto v = static_cast<Vertex>(state / 2);
    auto nb = g.neighbors(v);
    auto ids = g.incident(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (!r.contains(ids[i]) || avoid.contains(nb[i])) continue;
      std::size_t t = 2 * nb[i] + ((state & 1) ^ 1);
      if (dist[t] + 1 == dist[state]) {
        state = t;
        walk.push_back(nb[i]);
        break;
      }
    }
  }
  VertexSet seen(n);
  bool simple = true;
  for (Vertex v : walk) {
    if (seen.contains(v)) simple = false;
    seen.insert(v);
  }
  if (simple) return walk;

  // Iterative deepening over odd lengths, shortest first. Another simple path
  // may have the walk's length, so the first round uses it too.
  Path path{x};
  VertexSet on(n);
  on.insert(x);
  std::uint64_t nodes = 0;
  std::size_t limit = 0;
  std::function<bool()> dfs = [&]() -> bool {
    if (++nodes > dfs_budget) return false;
    const Vertex v = path.back();
    const std::size_t steps = path.size() - 1;
    if (v == y) return steps % 2 == 1 && steps == limit;
    auto nb = g.neighbors(v);
    auto ids = g.incident(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[i];
      if (!r.contains(ids[i]) || avoid.contains(w) || on.contains(w)) continue;
      std::size_t rest = dist[2 * w + ((steps + 1) & 1)];
      if (rest == inf || steps + 1 + rest > limit) continue;
      path.push_back(w);
      on.insert(w);
      if (dfs()) return true;
      on.erase(w);
      path.pop_back();
    }
    return false;
  };
  for (limit = shortest; limit + 1 <= max_len && nodes <= dfs_budget; limit += 2)
    if (dfs()) return path;
  return std::nullopt;
}

}  // namespace detail

/// Valid switcher cycles, at most one per non-R edge (its shortest), sorted
/// by length and then by the non-R edge id. Every returned cycle is even,
/// has exactly one edge outside R, meets the SMALL adjacency conditions and
/// respects switcher_cycle_cap.
inline std::vector<SwitcherCycle> switcher_cycle_candidates(const Graph& g, const EdgeVector& r,
                                                            const SwitcherSearchOptions& opt = {}) {
  if (r.universe() != g.size()) throw std::invalid_argument("dimension mismatch");
  const VertexSet avoid = opt.avoid.value_or(VertexSet(g.order()));
  const VertexSet small = opt.small.value_or(g.order() >= 2 ? small_vertices(g) : VertexSet(g.order()));
  const std::size_t max_len = switcher_cycle_cap(g.order()).value_or(g.order());
  std::vector<SwitcherCycle> out;
  for (EdgeId id = 0; id < g.size(); ++id) {
    if (r.contains(id)) continue;
    const Edge e = g.edge(id);
    if (avoid.contains(e.u) || avoid.contains(e.v)) continue;
    auto p = detail::switcher_cycle_through(g, r, e.u, e.v, avoid, max_len, opt.dfs_budget);
    if (!p || !small_adjacency_ok(g, *p, small)) continue;
    EdgeVector c = edge_vector_of_walk(g, *p, true);
    EdgeVector outside = c - r;
    if (p->size() % 2 || p->size() < 4 || outside.count() != 1 || !outside.contains(id) || p->size() > max_len)
      throw std::logic_error("switcher cycle failed verification");
    out.push_back({std::move(*p), std::move(c), id});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SwitcherCycle& a, const SwitcherCycle& b) { return a.cycle.size() < b.cycle.size(); });
  return out;
}

/// Shortest valid switcher cycle (ties by non-R edge id), or nullopt when
/// none exists within the cap; in particular when R = E(G).
inline std::optional<SwitcherCycle> find_switcher_cycle(const Graph& g, const EdgeVector& r,
                                                        const SwitcherSearchOptions& opt = {}) {
  auto all = switcher_cycle_candidates(g, r, opt);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

inline std::optional<SwitcherCycle> find_switcher_cycle(const Graph& g, const EdgeVector& r, const VertexSet& avoid) {
  SwitcherSearchOptions opt;
  opt.avoid = avoid;
  return find_switcher_cycle(g, r, opt);
}

}  // namespace hamspan
