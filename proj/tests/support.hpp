#pragma once

// Shared fixtures and brute-force oracles. The oracles deliberately avoid the
// library's search code: they enumerate permutations or all simple paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "hamspan/hamspan.hpp"

namespace testing {

using namespace hamspan;

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.push_back({v, static_cast<Vertex>((v + 1) % n)});
  return Graph::from_edge_list(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph::from_edge_list(n, e);
}

inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::from_edge_list(leaves + 1, e);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - i+5.
inline Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});
    e.push_back({static_cast<Vertex>(5 + i), static_cast<Vertex>(5 + (i + 2) % 5)});
    e.push_back({i, static_cast<Vertex>(5 + i)});
  }
  return Graph::from_edge_list(10, e);
}

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

inline EdgeVector edges_of(const Graph& g, std::initializer_list<Edge> es) { return edge_vector_of(g, es); }

/// Every Hamilton cycle as an edge vector, by permuting vertices 1..n-1 and
/// keeping one of the two directions (perm.front() < perm.back()).
inline std::vector<EdgeVector> hamilton_vectors_by_permutation(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<EdgeVector> out;
  if (n < 3) return out;
  std::vector<Vertex> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (perm.front() > perm.back()) continue;
    bool ok = g.adjacent(0, perm.front()) && g.adjacent(perm.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (!ok) continue;
    Path order{0};
    order.insert(order.end(), perm.begin(), perm.end());
    out.push_back(edge_vector_of_walk(g, order, true));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Length of a shortest x-y path by enumerating every simple path from x.
inline std::optional<std::size_t> brute_force_distance(const Graph& g, Vertex x, Vertex y, const VertexSet& forbidden,
                                                       const EdgeVector* only = nullptr) {
  if (x == y) return 0;
  std::optional<std::size_t> best;
  std::vector<bool> seen(g.order(), false);
  std::function<void(Vertex, std::size_t)> walk = [&](Vertex v, std::size_t len) {
    if (v == y) {
      if (!best || len < *best) best = len;
      return;
    }
    auto nb = g.neighbors(v);
    auto ids = g.incident(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[i];
      if (seen[w] || (forbidden.contains(w) && w != y)) continue;
      if (only && !only->contains(ids[i])) continue;
      seen[w] = true;
      walk(w, len + 1);
      seen[w] = false;
    }
  };
  seen[x] = true;
  walk(x, 0);
  return best;
}

/// Connected components by union-find, independent of the library's BFS.
inline std::size_t component_count_union_find(const Graph& g) {
  std::vector<std::size_t> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  std::size_t c = g.order();
  for (const auto& e : g.edges()) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --c;
    }
  }
  return c;
}

struct RandomSwitcher {
  Graph g;
  ParitySwitcher w;
  EdgeVector r;
};

/// A valid switcher with k in [2, 6]: the cycle is 0..2k-1, each P_i gets
/// 0-3 fresh internal vertices, a few extra chords are sprinkled in, and R is
/// random with a cycle edge flipped if needed to make |E(C) ∩ R| odd.
inline RandomSwitcher random_switcher(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t k = 2 + rng.below(5);
  Path cycle(2 * k);
  std::iota(cycle.begin(), cycle.end(), 0);
  Vertex next = static_cast<Vertex>(2 * k);
  std::vector<Path> paths;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 2 * k; ++i) edges.push_back({cycle[i], cycle[(i + 1) % (2 * k)]});
  for (std::size_t i = 2; i <= k; ++i) {
    Path p{cycle[i - 1]};
    const std::size_t inner = rng.below(4);
    for (std::size_t j = 0; j < inner; ++j) p.push_back(next++);
    p.push_back(cycle[2 * k - i + 1]);
    for (std::size_t j = 0; j + 1 < p.size(); ++j) edges.push_back({p[j], p[j + 1]});
    paths.push_back(std::move(p));
  }
  const std::size_t n = next;
  std::set<Edge> have;
  for (auto& e : edges) have.insert(e.u < e.v ? e : Edge{e.v, e.u});
  for (std::size_t extra = rng.below(n); extra > 0; --extra) {
    Vertex u = static_cast<Vertex>(rng.below(n)), v = static_cast<Vertex>(rng.below(n));
    if (u == v) continue;
    Edge e = u < v ? Edge{u, v} : Edge{v, u};
    if (have.insert(e).second) edges.push_back(e);
  }
  RandomSwitcher out{Graph::from_edge_list(n, std::vector<Edge>(have.begin(), have.end())), {cycle, paths}, {}};
  out.r = EdgeVector(out.g.size());
  for (EdgeId id = 0; id < out.g.size(); ++id)
    if (rng.bernoulli(0.5)) out.r.insert(id);
  const EdgeVector c = edge_vector_of_walk(out.g, cycle, true);
  if (!intersection_parity(c, out.r)) out.r.flip(*out.g.edge_id(cycle[0], cycle[1]));
  return out;
}

}  // namespace testing
