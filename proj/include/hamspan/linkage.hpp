#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/graph.hpp"
#include "hamspan/rng.hpp"

namespace hamspan {

struct LinkageOptions {
  std::uint64_t seed = 0;
  /// Number of ordering attempts, the first one deterministic.
  std::size_t retries = 200;
};

namespace detail {

/// Shortest a-b path avoiding `blocked`. With an rng, each vertex's neighbor
/// list is scanned from a random offset, which randomizes tie-breaking.
inline std::optional<Path> bfs_avoiding(const Graph& g, Vertex a, Vertex b, const VertexSet& blocked, Rng* rng) {
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(g.order(), none);
  parent[a] = a;
  std::deque<Vertex> queue{a};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    auto nb = g.neighbors(v);
    std::size_t start = (rng && !nb.empty()) ? static_cast<std::size_t>(rng->below(nb.size())) : 0;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      Vertex w = nb[(start + k) % nb.size()];
      if (parent[w] != none) continue;
      if (w != b && blocked.contains(w)) continue;
      parent[w] = v;
      if (w == b) {
        Path p{b};
        while (p.back() != a) p.push_back(parent[p.back()]);
        std::reverse(p.begin(), p.end());
        return p;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Pairwise vertex-disjoint paths P_i from pairs[i].first to pairs[i].second,
/// avoiding `forbidden`.
///
/// Pairs are routed one at a time by BFS in the residual graph. When a pair
/// cannot be routed it is moved to the front and the remaining order is
/// reshuffled; later attempts also randomize BFS tie-breaking. Absence means
/// the retry budget ran out, not that no linkage exists.
inline std::optional<std::vector<Path>> disjoint_pair_paths(const Graph& g,
                                                            const std::vector<std::pair<Vertex, Vertex>>& pairs,
                                                            const VertexSet& forbidden,
                                                            const LinkageOptions& opt = {}) {
  VertexSet endpoints(g.order());
  for (const auto& [a, b] : pairs) {
    for (Vertex v : {a, b}) {
      if (v >= g.order()) throw std::out_of_range("linkage endpoint out of range");
      if (endpoints.contains(v))
        throw std::invalid_argument("linkage endpoints must be distinct; vertex " + std::to_string(v) + " repeats");
      if (forbidden.contains(v)) throw std::invalid_argument("linkage endpoint " + std::to_string(v) + " is forbidden");
      endpoints.insert(v);
    }
  }
  if (pairs.empty()) return std::vector<Path>{};

  Rng rng(opt.seed);
  std::vector<std::size_t> order(pairs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(opt.retries, 1); ++attempt) {
    std::vector<Path> paths(pairs.size());
    VertexSet blocked = forbidden | endpoints;
    std::optional<std::size_t> failed;
    for (std::size_t idx : order) {
      auto [a, b] = pairs[idx];
      auto p = detail::bfs_avoiding(g, a, b, blocked, attempt == 0 ? nullptr : &rng);
      if (!p) {
        failed = idx;
        break;
      }
      for (Vertex v : *p) blocked.insert(v);
      paths[idx] = std::move(*p);
    }
    if (!failed) {
      VertexSet used(g.order());
      for (std::size_t i = 0; i < paths.size(); ++i) {
        const auto& p = paths[i];
        if (!is_simple_path(g, p) || p.front() != pairs[i].first || p.back() != pairs[i].second)
          throw std::logic_error("linkage produced a malformed path");
        for (Vertex v : p) {
          if (used.contains(v) || forbidden.contains(v)) throw std::logic_error("linkage paths intersect");
          used.insert(v);
        }
      }
      return paths;
    }
    std::vector<std::size_t> rest;
    for (auto i : order)
      if (i != *failed) rest.push_back(i);
    rng.shuffle(rest);
    order.assign(1, *failed);
    order.insert(order.end(), rest.begin(), rest.end());
  }
  return std::nullopt;
}

}  // namespace hamspan
