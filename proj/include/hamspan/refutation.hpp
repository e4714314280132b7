#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/hamfinder.hpp"
#include "hamspan/linkage.hpp"
#include "hamspan/result.hpp"
#include "hamspan/rng.hpp"
#include "hamspan/spanning.hpp"
#include "hamspan/switcher.hpp"

namespace hamspan {

/// Random stand-in for a witness: each edge with probability 1/2, then
/// hillclimb-normalized. Draws are rejected while R is a cut (it would pair
/// evenly with every cycle) or covers all of E(G).
inline std::optional<WitnessR> synthetic_witness(const Graph& g, std::uint64_t seed, std::size_t tries = 100) {
  for (std::size_t t = 0; t < tries; ++t) {
    Rng rng(derive_seed(seed, t));
    EdgeVector r(g.size());
    for (EdgeId id = 0; id < g.size(); ++id)
      if (rng.bernoulli(0.5)) r.insert(id);
    WitnessR w = normalize_witness(g, WitnessR{r}, NormalizeMode::hillclimb);
    if (w.size() == g.size() || is_bipartition_form(g, w.vector)) continue;
    w.odd_with_some_cycle = true;
    return w;
  }
  return std::nullopt;
}

struct RefutationOptions {
  std::uint64_t seed = 0;
  /// Total (cycle, labelling, seed) combinations tried.
  std::size_t attempts = 24;
  /// Switcher cycles considered, shortest first.
  std::size_t max_cycles = 8;
  std::size_t split_retries = 10'000;
  std::size_t linkage_retries = 200;
  std::uint64_t path_budget = 1'000'000;
  std::size_t protected_attempts = 4;
};

struct RefutationOutcome {
  HamiltonCycle cycle;
  SwitcherCycle switcher_cycle;
  ParitySwitcher switcher;
  /// Hamilton path of the rest of the graph, v_1 to v_{k+1}.
  Path outside_path;
  std::size_t attempts = 0;
};

/// A switcher built around a labelled switcher cycle v_1..v_2k, with the
/// escorts v'_i and the vertex set W the outside path must avoid (all of
/// the switcher except v'_1 and v'_{k+1}).
struct SwitcherBuild {
  ParitySwitcher switcher;
  std::vector<Vertex> escorts;
  VertexSet protected_set;
};

/// (S2b) for a fixed labelling of the switcher cycle (the closing edge
/// v_2k v_1 need not be the non-R edge): escorts for SMALL cycle vertices,
/// a split of the rest, and disjoint links P_2..P_k through the B side.
inline Result<SwitcherBuild> build_switcher(const Graph& g, const VertexSet& small, const Path& cyc,
                                            const RefutationOptions& opt, std::uint64_t seed) {
  const std::size_t n = g.order();
  const std::size_t len = cyc.size(), k = len / 2;
  if (len < 4 || len % 2) throw std::invalid_argument("switcher cycle must be even with at least 4 vertices");
  Rng rng(seed);
  VertexSet on_cycle(n);
  for (Vertex v : cyc) on_cycle.insert(v);

  // Escorts v'_i: a non-SMALL neighbor off C for SMALL v_i, else v_i itself.
  std::vector<Vertex> esc(len);
  VertexSet taken = on_cycle;
  for (std::size_t i = 0; i < len; ++i) {
    if (!small.contains(cyc[i])) {
      esc[i] = cyc[i];
      continue;
    }
    std::vector<Vertex> options;
    for (Vertex w : g.neighbors(cyc[i]))
      if (!small.contains(w) && !taken.contains(w)) options.push_back(w);
    if (options.empty()) return Failure{"S2b", "no escort for SMALL cycle vertex " + std::to_string(cyc[i])};
    esc[i] = rng.pick(options);
    taken.insert(esc[i]);
  }
  VertexSet u_set = taken;  // V(C) plus escorts
  VertexSet z = small | external_neighborhood(g, small);

  // Split Y = V \ (SMALL ∪ U) into A' (about n/2) and the rest.
  VertexSet y = (small | u_set).complement();
  VertexSet a_prime(n);
  if (y.count() >= 2) {
    VertexSet constrained(n);
    small.complement().for_each([&](std::size_t v) {
      if (degree_into(g, static_cast<Vertex>(v), y) >= 2) constrained.insert(v);
    });
    const std::size_t a = std::min(n / 2, y.count() - 1);
    auto split = lll_split(g, SplitRequest{y, a, y.count() - a, constrained}, opt.split_retries, rng.next());
    if (!split) return Failure{"S2b", split.failure().detail};
    a_prime = split->a;
  }
  VertexSet b_prime = (a_prime | small).complement();
  VertexSet b = b_prime - z;
  for (Vertex v : esc) b.insert(v);

  // G_1 = G[B] - {v'_1, v'_{k+1}} minus the edges of C and the escort edges.
  VertexSet g1_keep = b;
  g1_keep.erase(esc[0]);
  g1_keep.erase(esc[k]);
  EdgeVector drop = edge_vector_of_walk(g, cyc, true);
  for (std::size_t i = 0; i < len; ++i)
    if (esc[i] != cyc[i]) drop.insert(*g.edge_id(cyc[i], esc[i]));
  auto g1 = restrict(g, g1_keep, drop);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 2; i <= k; ++i) pairs.push_back({g1.inverse[esc[i - 1]], g1.inverse[esc[2 * k - i + 1]]});
  auto links = disjoint_pair_paths(g1.graph, pairs, VertexSet(g1.graph.order()),
                                   LinkageOptions{rng.next(), opt.linkage_retries});
  if (!links) return Failure{"S2b", "no disjoint linkage for the switcher paths"};

  SwitcherBuild out;
  out.switcher.cycle = cyc;
  VertexSet w_set = on_cycle;
  for (std::size_t i = 2; i <= k; ++i) {
    Path p;
    const std::size_t left = i - 1, right = 2 * k - i + 1;
    if (esc[left] != cyc[left]) p.push_back(cyc[left]);
    for (Vertex v : g1.lift((*links)[i - 2])) {
      p.push_back(v);
      w_set.insert(v);
    }
    if (esc[right] != cyc[right]) p.push_back(cyc[right]);
    out.switcher.paths.push_back(std::move(p));
  }
  w_set.erase(esc[0]);
  w_set.erase(esc[k]);
  out.escorts = std::move(esc);
  out.protected_set = std::move(w_set);
  return out;
}

/// Labelling of attempt a: rotate the start and, every other full turn,
/// reverse direction.
inline Path labelled_cycle(const Path& cycle, std::size_t round) {
  Path cyc = cycle;
  std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(round % cyc.size()), cyc.end());
  if ((round / cyc.size()) % 2) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

namespace detail {

/// One pass of the recipe for a fixed labelling of the switcher cycle.
inline Result<RefutationOutcome> refute_with_cycle(const Graph& g, const EdgeVector& r, const VertexSet& small,
                                                   const Path& cyc, const RefutationOptions& opt, std::uint64_t seed) {
  const std::size_t k = cyc.size() / 2;
  Rng rng(seed);
  auto built = build_switcher(g, small, cyc, opt, rng.next());
  if (!built) return built.failure();
  const std::vector<Vertex>& esc = built->escorts;

  // S3: Hamilton path of G - W between v'_1 and v'_{k+1}.
  ProtectedOptions popt;
  popt.seed = rng.next();
  popt.budget = opt.path_budget;
  popt.attempts = opt.protected_attempts;
  popt.split_retries = opt.split_retries;
  popt.linkage_retries = opt.linkage_retries;
  popt.small = small;
  const VertexSet rest = built->protected_set.complement();
  std::optional<Path> outside;
  try {
    auto p = hamilton_path_protected(g, rest, esc[0], esc[k], popt);
    if (!p) return Failure{"S3", p.failure().stage + ": " + p.failure().detail};
    outside = *p;
  } catch (const std::invalid_argument& e) {
    return Failure{"S3", e.what()};
  }
  if (esc[0] != cyc[0]) outside->insert(outside->begin(), cyc[0]);
  if (esc[k] != cyc[k]) outside->push_back(cyc[k]);

  // S4: the switcher path of opposite parity; S5: close the cycle.
  auto [even_path, odd_path] = hamilton_paths_of_switcher(g, built->switcher, r);
  const bool outside_odd = intersection_parity(edge_vector_of_walk(g, *outside, false), r);
  Path order = outside_odd ? even_path : odd_path;
  order.insert(order.end(), outside->rbegin() + 1, outside->rend() - 1);
  HamiltonCycle h = make_hamilton_cycle(g, order);
  if (!intersection_parity(h.vector, r)) throw std::logic_error("refutation produced an even Hamilton cycle");
  return RefutationOutcome{std::move(h), {}, std::move(built->switcher), std::move(*outside), 0};
}

}  // namespace detail

/// Builds a Hamilton cycle meeting r in an odd number of edges: a switcher
/// cycle (S2a), escorts, a split and linked switcher paths (S2b), a
/// Hamilton path through everything else (S3), then the switcher path of
/// opposite parity (S4) closes it (S5). Attempts cycle through candidate
/// switcher cycles, their labellings and seeds. Failures carry the stage of
/// the last attempt.
inline Result<RefutationOutcome> refutation_pipeline(const Graph& g, const EdgeVector& r, const RefutationOptions& opt = {}) {
  if (r.universe() != g.size()) throw std::invalid_argument("dimension mismatch");
  if (r.count() == g.size()) return Failure{"S2a", "no non-R edge"};
  const VertexSet small = g.order() >= 2 ? small_vertices(g) : VertexSet(g.order());
  SwitcherSearchOptions sopt;
  sopt.small = small;
  auto candidates = switcher_cycle_candidates(g, r, sopt);
  if (candidates.empty()) return Failure{"S2a", "no switcher cycle within the length cap"};
  if (candidates.size() > opt.max_cycles) candidates.resize(std::max<std::size_t>(opt.max_cycles, 1));

  Failure last{"S2b", "no attempt made"};
  for (std::size_t a = 0; a < std::max<std::size_t>(opt.attempts, 1); ++a) {
    const SwitcherCycle& sc = candidates[a % candidates.size()];
    const Path cyc = labelled_cycle(sc.cycle, a / candidates.size());
    auto res = detail::refute_with_cycle(g, r, small, cyc, opt, derive_seed(opt.seed, a));
    if (res) {
      RefutationOutcome out = std::move(res).value();
      out.switcher_cycle = sc;
      out.attempts = a + 1;
      return out;
    }
    last = res.failure();
  }
  return last;
}

struct SwitcherOutcome {
  SwitcherCycle switcher_cycle;
  SwitcherBuild build;
  std::size_t attempts = 0;
};

/// Stages S2a and S2b alone: a parity switcher around a short switcher
/// cycle, without the outside Hamilton path.
inline Result<SwitcherOutcome> build_parity_switcher(const Graph& g, const EdgeVector& r, const RefutationOptions& opt = {}) {
  if (r.universe() != g.size()) throw std::invalid_argument("dimension mismatch");
  if (r.count() == g.size()) return Failure{"S2a", "no non-R edge"};
  const VertexSet small = g.order() >= 2 ? small_vertices(g) : VertexSet(g.order());
  SwitcherSearchOptions sopt;
  sopt.small = small;
  auto candidates = switcher_cycle_candidates(g, r, sopt);
  if (candidates.empty()) return Failure{"S2a", "no switcher cycle within the length cap"};
  if (candidates.size() > opt.max_cycles) candidates.resize(std::max<std::size_t>(opt.max_cycles, 1));
  Failure last{"S2b", "no attempt made"};
  for (std::size_t a = 0; a < std::max<std::size_t>(opt.attempts, 1); ++a) {
    const SwitcherCycle& sc = candidates[a % candidates.size()];
    auto res = build_switcher(g, small, labelled_cycle(sc.cycle, a / candidates.size()), opt, derive_seed(opt.seed, a));
    if (res) {
      validate_switcher(g, res->switcher, r);
      return SwitcherOutcome{sc, std::move(res).value(), a + 1};
    }
    last = res.failure();
  }
  return last;
}

}  // namespace hamspan
