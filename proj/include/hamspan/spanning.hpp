#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/hamfinder.hpp"
#include "hamspan/rng.hpp"

namespace hamspan {

/// Hamilton cycle in canonical form: order[0] == 0 and order[1] < order.back().
struct HamiltonCycle {
  Path order;
  EdgeVector vector;

  friend bool operator==(const HamiltonCycle& a, const HamiltonCycle& b) { return a.order == b.order; }
};

/// Canonicalizes a cyclic vertex sequence. Throws std::invalid_argument unless
/// it is a Hamilton cycle of g.
inline HamiltonCycle make_hamilton_cycle(const Graph& g, Path order) {
  const std::size_t n = g.order();
  if (n < 3 || order.size() != n) throw std::invalid_argument("not a Hamilton cycle: wrong length");
  auto zero = std::find(order.begin(), order.end(), Vertex{0});
  if (zero == order.end()) throw std::invalid_argument("not a Hamilton cycle: vertex 0 missing");
  std::rotate(order.begin(), zero, order.end());
  if (order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  if (!is_simple_path(g, order) || !g.adjacent(order.back(), order.front()))
    throw std::invalid_argument("not a Hamilton cycle of the graph");
  EdgeVector v = edge_vector_of_walk(g, order, true);
  return {std::move(order), std::move(v)};
}

// ---------------------------------------------------------------------------
// Enumeration

enum class EnumerationStatus { complete, stopped, budget_exhausted };

/// Backtracking enumeration of all Hamilton cycles (n <= 64), each reported
/// once in canonical form. The visitor returns false to stop early.
///
/// The path grows from vertex 0 over bitmask adjacency. A branch is cut when
/// some unvisited vertex has fewer than two neighbors among the unvisited
/// vertices, the current end and vertex 0, or when the unvisited vertices
/// are not all reachable from the end through unvisited vertices.
/// `budget` caps node expansions; `nodes` (if given) receives the count.
inline EnumerationStatus for_each_hamilton_cycle(const Graph& g, const std::function<bool(const HamiltonCycle&)>& visit,
                                                 std::uint64_t budget = 100'000'000, std::uint64_t* nodes = nullptr) {
  const std::size_t n = g.order();
  if (n > 64) throw std::invalid_argument("exact Hamilton enumeration supports n <= 64");
  std::uint64_t expanded = 0;
  if (nodes) *nodes = 0;
  if (n < 3) return EnumerationStatus::complete;

  std::vector<std::uint64_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  for (Vertex v = 0; v < n; ++v)
    if (std::popcount(adj[v]) < 2) return EnumerationStatus::complete;

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Path path{0};
  path.reserve(n);
  bool stop = false, exhausted = false;

  auto feasible = [&](std::uint64_t unvisited, Vertex end) {
    const std::uint64_t avail = unvisited | (std::uint64_t{1} << end) | 1u;
    for (std::uint64_t rest = unvisited; rest; rest &= rest - 1) {
      auto w = static_cast<Vertex>(std::countr_zero(rest));
      if (std::popcount(adj[w] & avail) < 2) return false;
    }
    std::uint64_t reached = 0, frontier = adj[end] & unvisited;
    while (frontier) {
      reached |= frontier;
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & unvisited & ~reached;
    }
    return reached == unvisited;
  };

  std::function<void(std::uint64_t)> dfs = [&](std::uint64_t unvisited) {
    if (stop || exhausted) return;
    if (++expanded > budget) {
      exhausted = true;
      return;
    }
    const Vertex end = path.back();
    if (!unvisited) {
      if ((adj[end] & 1u) && path[1] < end) {
        HamiltonCycle c{path, edge_vector_of_walk(g, path, true)};
        if (!visit(c)) stop = true;
      }
      return;
    }
    for (std::uint64_t cand = adj[end] & unvisited; cand && !stop && !exhausted; cand &= cand - 1) {
      auto w = static_cast<Vertex>(std::countr_zero(cand));
      // Canonical orientation: the last vertex must exceed path[1].
      if (path.size() == 1 && (w == 63 || (adj[0] >> (w + 1)) == 0)) continue;
      if (path.size() >= 2 && unvisited == (std::uint64_t{1} << w) && w < path[1]) continue;
      const std::uint64_t rest = unvisited & ~(std::uint64_t{1} << w);
      path.push_back(w);
      if (!rest || feasible(rest, w)) dfs(rest);
      path.pop_back();
    }
  };
  dfs(all & ~std::uint64_t{1});
  if (nodes) *nodes = expanded;
  if (exhausted) return EnumerationStatus::budget_exhausted;
  return stop ? EnumerationStatus::stopped : EnumerationStatus::complete;
}

/// All Hamilton cycles (up to `limit`). Throws std::runtime_error if the node
/// budget runs out first.
inline std::vector<HamiltonCycle> enumerate_hamilton_cycles(const Graph& g, std::optional<std::size_t> limit = std::nullopt,
                                                            std::uint64_t budget = 100'000'000) {
  std::vector<HamiltonCycle> out;
  auto status = for_each_hamilton_cycle(
      g,
      [&](const HamiltonCycle& c) {
        out.push_back(c);
        return !limit || out.size() < *limit;
      },
      budget);
  if (status == EnumerationStatus::budget_exhausted) throw std::runtime_error("Hamilton enumeration budget exhausted");
  return out;
}

// ---------------------------------------------------------------------------
// Witnesses

/// Dual witness R: pairs evenly with every Hamilton cycle and oddly with some
/// cycle. Flags record what has been verified.
struct WitnessR {
  EdgeVector vector;
  bool even_with_all_hamilton = false;
  bool odd_with_some_cycle = false;
  bool normalized = false;
  /// Star flips performed by normalization.
  std::size_t flips = 0;

  std::size_t size() const { return vector.count(); }
};

/// First fundamental cycle meeting r oddly, if any.
inline std::optional<EdgeVector> odd_cycle_for(const Graph& g, const EdgeVector& r) {
  for (auto& z : cycle_space_basis(g))
    if (intersection_parity(z, r)) return z;
  return std::nullopt;
}

/// The witness predicate: even against every listed Hamilton cycle, odd
/// against some cycle of g.
inline bool is_witness(const Graph& g, const EdgeVector& r, const std::vector<HamiltonCycle>& hamiltons) {
  for (const auto& h : hamiltons)
    if (intersection_parity(h.vector, r)) return false;
  return odd_cycle_for(g, r).has_value();
}

/// Witness from the orthogonal complement of the Hamilton vectors. Kernel
/// basis vectors are tried by increasing support (ties by bits). If the
/// Hamilton span misses part of the cycle space, the kernel is not contained
/// in the cut space, so some basis vector already qualifies.
inline std::optional<WitnessR> extract_witness(const Graph& g, const std::vector<EdgeVector>& hamilton_vectors) {
  auto kernel = orthogonal_complement(hamilton_vectors, g.size());
  std::sort(kernel.begin(), kernel.end(), [](const EdgeVector& a, const EdgeVector& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  const auto basis = cycle_space_basis(g);
  for (const auto& k : kernel)
    for (const auto& z : basis)
      if (intersection_parity(k, z)) return WitnessR{k, true, true, false, 0};
  return std::nullopt;
}

inline std::optional<WitnessR> extract_witness(const Graph& g, const std::vector<HamiltonCycle>& hamiltons) {
  std::vector<EdgeVector> vs;
  vs.reserve(hamiltons.size());
  for (const auto& h : hamiltons) vs.push_back(h.vector);
  return extract_witness(g, vs);
}

enum class NormalizeMode { exact, hillclimb };

namespace detail {

// Flip the star of v in r, keeping deg_r consistent.
inline void flip_star(const Graph& g, Vertex v, EdgeVector& r, std::vector<std::size_t>& deg_r) {
  auto nb = g.neighbors(v);
  auto ids = g.incident(v);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    if (r.contains(ids[i])) {
      --deg_r[nb[i]];
      --deg_r[v];
    } else {
      ++deg_r[nb[i]];
      ++deg_r[v];
    }
    r.flip(ids[i]);
  }
}

}  // namespace detail

/// Largest-support representative of r's coset modulo the cut space. Cuts
/// are orthogonal to every cycle, so all cycle pairings are unchanged.
///
/// hillclimb: while some vertex has 2·deg_R(v) < deg_G(v), flip the star of
/// the lowest such vertex. Each flip grows |R|, so there are at most m flips,
/// and afterwards deg_R(v) >= deg_G(v)/2 everywhere.
/// exact: per connected component, a Gray-code sweep over the 2^(k-1) cuts
/// (components of size k <= 24). The maximizer has e_R(A,B) >= e_G(A,B)/2
/// for every partition.
inline WitnessR normalize_witness(const Graph& g, WitnessR r, NormalizeMode mode) {
  if (r.vector.universe() != g.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::size_t> deg_r = subgraph_degrees(g, r.vector);

  if (mode == NormalizeMode::hillclimb) {
    for (Vertex v = 0; v < g.order();) {
      if (2 * deg_r[v] < g.degree(v)) {
        detail::flip_star(g, v, r.vector, deg_r);
        ++r.flips;
        v = 0;
      } else {
        ++v;
      }
    }
  } else {
    auto comps = connected_components(g);
    std::vector<std::vector<Vertex>> members(comps.count);
    for (Vertex v = 0; v < g.order(); ++v) members[comps.label[v]].push_back(v);
    for (const auto& comp : members) {
      if (comp.size() < 2) continue;
      if (comp.size() > 24) throw std::invalid_argument("exact normalization supports components of at most 24 vertices");
      // The lowest vertex stays fixed: flipping a whole component is the identity.
      const std::size_t k = comp.size() - 1;
      std::int64_t size = static_cast<std::int64_t>(r.vector.count()), best = size;
      std::uint32_t gray = 0, best_gray = 0;
      for (std::uint32_t i = 1; i < (std::uint32_t{1} << k); ++i) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(i));
        const Vertex v = comp[bit + 1];
        size += static_cast<std::int64_t>(g.degree(v)) - 2 * static_cast<std::int64_t>(deg_r[v]);
        detail::flip_star(g, v, r.vector, deg_r);
        gray ^= std::uint32_t{1} << bit;
        if (size > best) {
          best = size;
          best_gray = gray;
        }
      }
      // Move from the final Gray state to the best one.
      for (std::uint32_t diff = gray ^ best_gray; diff; diff &= diff - 1) {
        detail::flip_star(g, comp[std::countr_zero(diff) + 1], r.vector, deg_r);
        ++r.flips;
      }
    }
  }
  r.normalized = true;
  return r;
}

/// True iff r = E_G(A, V \ A) for some A, i.e. r is a cut. Two-colors G so
/// that edges in r join different colors and the other edges join equal
/// colors; r is a cut iff this succeeds.
inline bool is_bipartition_form(const Graph& g, const EdgeVector& r) {
  if (r.universe() != g.size()) throw std::invalid_argument("dimension mismatch");
  std::vector<int> color(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      auto nb = g.neighbors(v);
      auto ids = g.incident(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        int want = color[v] ^ (r.contains(ids[i]) ? 1 : 0);
        if (color[nb[i]] < 0) {
          color[nb[i]] = want;
          queue.push_back(nb[i]);
        } else if (color[nb[i]] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Span decisions

enum class SpanKind { spanned_exact, spanned_confirmed, not_spanned, trivially_spanned, inconclusive };

inline const char* to_string(SpanKind k) {
  switch (k) {
    case SpanKind::spanned_exact: return "SpannedExact";
    case SpanKind::spanned_confirmed: return "SpannedConfirmed";
    case SpanKind::not_spanned: return "NotSpanned";
    case SpanKind::trivially_spanned: return "TriviallySpanned";
    case SpanKind::inconclusive: return "Inconclusive";
  }
  return "?";
}

struct SpanVerdict {
  SpanKind kind = SpanKind::inconclusive;
  std::size_t rank_reached = 0;
  std::size_t dim_cycle_space = 0;
  std::optional<WitnessR> witness;
  /// Hamilton cycles whose vectors are independent and reach rank_reached.
  std::vector<HamiltonCycle> certificate;
  /// Node expansions (exact) or Hamilton path attempts (sampled).
  std::uint64_t work = 0;
  std::string note;
};

/// Decides C_n(G) = C(G) by full enumeration. Inconclusive only when the
/// node budget runs out.
inline SpanVerdict decide_spanning_exact(const Graph& g, std::uint64_t budget = 100'000'000) {
  SpanVerdict out;
  out.dim_cycle_space = cycle_space_dimension(g);
  if (out.dim_cycle_space == 0) {
    out.kind = SpanKind::trivially_spanned;
    return out;
  }
  Gf2Basis basis(g.size());
  auto status = for_each_hamilton_cycle(
      g,
      [&](const HamiltonCycle& c) {
        if (basis.insert(c.vector).outcome == Gf2Basis::Outcome::extended) out.certificate.push_back(c);
        return basis.rank() < out.dim_cycle_space;
      },
      budget, &out.work);
  out.rank_reached = basis.rank();
  if (out.rank_reached == out.dim_cycle_space) {
    out.kind = SpanKind::spanned_exact;
    return out;
  }
  if (status == EnumerationStatus::budget_exhausted) {
    out.note = "node budget exhausted";
    return out;
  }
  std::vector<EdgeVector> rows;
  for (const auto& c : out.certificate) rows.push_back(c.vector);
  out.witness = extract_witness(g, rows);
  if (!out.witness) throw std::logic_error("rank below dim but no witness in the kernel");
  // Re-check the witness against every Hamilton cycle, not only the certificate.
  std::uint64_t recheck = 0;
  bool even = true;
  for_each_hamilton_cycle(
      g,
      [&](const HamiltonCycle& c) {
        even = !intersection_parity(c.vector, out.witness->vector);
        return even;
      },
      budget, &recheck);
  if (!even) throw std::logic_error("extracted witness pairs oddly with a Hamilton cycle");
  out.kind = SpanKind::not_spanned;
  if (out.certificate.empty()) out.note = "no Hamilton cycle";
  return out;
}

struct SampleOptions {
  /// Hamilton path attempts; each successful one yields a Hamilton cycle.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Rotation-extension steps per attempt.
  std::uint64_t path_budget = 1'000'000;
};

namespace detail {

/// Edges of a smallest-found representative of a direction the Hamilton
/// vectors so far miss. A Hamilton cycle meets every cut evenly, so it pairs
/// oddly with R exactly when it uses an odd number of R's edges; closing over
/// an edge of a one-edge R always extends the basis.
inline std::vector<EdgeId> closing_targets(const Graph& g, const std::vector<HamiltonCycle>& found) {
  std::vector<EdgeVector> rows;
  rows.reserve(found.size());
  for (const auto& h : found) rows.push_back(h.vector);
  auto w = extract_witness(g, rows);
  if (!w) return {};
  EdgeVector r = std::move(w->vector);
  auto deg_r = subgraph_degrees(g, r);
  for (Vertex v = 0; v < g.order();) {
    if (2 * deg_r[v] > g.degree(v)) {
      flip_star(g, v, r, deg_r);
      v = 0;
    } else {
      ++v;
    }
  }
  std::vector<EdgeId> out;
  r.for_each([&](std::size_t id) { out.push_back(static_cast<EdgeId>(id)); });
  return out;
}

}  // namespace detail

/// One-sided spanning check: close rotation-extension Hamilton paths x..y
/// over random edges xy into Hamilton cycles and eliminate. Never returns
/// NotSpanned. Attempt i draws from derive_seed(seed, i). Once a sample
/// fails to raise the rank, closing edges are drawn from closing_targets
/// instead; rotation-extension alone rarely uses some edges.
inline SpanVerdict confirm_spanning_sampled(const Graph& g, const SampleOptions& opt) {
  SpanVerdict out;
  out.dim_cycle_space = cycle_space_dimension(g);
  if (out.dim_cycle_space == 0) {
    out.kind = SpanKind::trivially_spanned;
    return out;
  }
  if (!is_connected(g) || min_degree(g) < 2) {
    out.note = "graph has no Hamilton cycle";
    return out;
  }
  RotationExtension search(g);
  Gf2Basis basis(g.size());
  std::vector<EdgeId> target;
  for (std::size_t i = 0; i < opt.samples && basis.rank() < out.dim_cycle_space; ++i) {
    ++out.work;
    const std::uint64_t s = derive_seed(opt.seed, i);
    Rng rng(s);
    const Edge e = g.edge(target.empty() ? static_cast<EdgeId>(rng.below(g.size())) : rng.pick(target));
    auto p = search.find(e.u, e.v, opt.path_budget, rng.next());
    if (!p) continue;
    auto c = make_hamilton_cycle(g, *p);
    if (basis.insert(c.vector).outcome == Gf2Basis::Outcome::extended) {
      out.certificate.push_back(std::move(c));
    } else {
      target = detail::closing_targets(g, out.certificate);
    }
  }
  out.rank_reached = basis.rank();
  if (out.rank_reached == out.dim_cycle_space) out.kind = SpanKind::spanned_confirmed;
  else out.note = "sample budget exhausted";
  return out;
}

inline SpanVerdict confirm_spanning_sampled(const Graph& g, std::size_t samples, std::uint64_t seed) {
  return confirm_spanning_sampled(g, SampleOptions{samples, seed});
}

}  // namespace hamspan
