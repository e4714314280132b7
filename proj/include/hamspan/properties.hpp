#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/rng.hpp"

namespace hamspan {

/// One checked property. A violation carries witness sets (and a path or
/// vertex where that is the natural certificate) which re-verify through
/// reverify_violation.
struct PropertyCheck {
  std::string name;
  bool holds = true;
  /// False when set-quantified and only sampled.
  bool exact = true;
  /// The property's quantifier range is empty for this n.
  bool vacuous = false;
  std::string detail;
  std::vector<VertexSet> sets;
  std::optional<Path> path;
  std::optional<Vertex> vertex;
};

inline PropertyCheck named_check(std::string name, bool exact) {
  PropertyCheck c;
  c.name = std::move(name);
  c.exact = exact;
  return c;
}

struct PropertyOptions {
  /// Edge probability for the P6 window; the edge density when unset.
  std::optional<double> p;
  /// Constant of the half-degree lemma, in (0, 1/4).
  double delta = 0.1;
  /// Largest n for exhaustive set enumeration.
  std::size_t exact_limit = 14;
  std::size_t samples = 10'000;
  std::uint64_t seed = 0;
};

struct PropertyReport {
  std::size_t n = 0;
  double p = 0.0;
  double delta = 0.1;
  std::vector<PropertyCheck> checks;

  const PropertyCheck& get(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no property named " + name);
  }
  bool all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const PropertyCheck& c) { return c.holds; });
  }
};

/// Size windows and bounds, all with natural logarithms.
struct PropertyBounds {
  double ln_n = 0, lnln_n = 0;
  double max_degree = 0;       // P1: 10 ln n
  double small_closure = 0;    // P2: sqrt n
  double short_path = 0;       // P3: 0.3 ln n / ln ln n
  double sparse_size = 0;      // P4/P5: |A| <= n (ln ln n)^2 / ln n
  double sparse_ratio = 0;     // P4/P5: e <= |A| ln n / ln ln n
  std::size_t p6_min = 0;      // P6: sizes >= n (ln ln n)^{3/2} / ln n
  std::size_t half_a = 0;      // half-degree: |A| = ceil(n (ln ln n)^2 / sqrt(ln n))
  std::size_t half_b = 0;      // half-degree: |B| = ceil((1/2 + delta) n)
  std::size_t robust_size = 0; // robust edge: |A| = |B| = ceil(2n/5)

  static PropertyBounds of(std::size_t n, double delta) {
    if (n < 3) throw std::invalid_argument("property bounds need n >= 3");
    PropertyBounds b;
    const double nd = static_cast<double>(n);
    b.ln_n = std::log(nd);
    b.lnln_n = std::log(b.ln_n);
    b.max_degree = 10.0 * b.ln_n;
    b.small_closure = std::sqrt(nd);
    b.short_path = 0.3 * b.ln_n / b.lnln_n;
    b.sparse_size = nd * b.lnln_n * b.lnln_n / b.ln_n;
    b.sparse_ratio = b.ln_n / b.lnln_n;
    b.p6_min = static_cast<std::size_t>(std::ceil(nd * std::pow(b.lnln_n, 1.5) / b.ln_n));
    b.half_a = static_cast<std::size_t>(std::ceil(nd * b.lnln_n * b.lnln_n / std::sqrt(b.ln_n)));
    b.half_b = static_cast<std::size_t>(std::ceil((0.5 + delta) * nd));
    b.robust_size = static_cast<std::size_t>(std::ceil(2.0 * nd / 5.0));
    return b;
  }
  /// |B| = floor(|A| sqrt(ln n)) in P5.
  std::size_t p5_partner(std::size_t a) const {
    return static_cast<std::size_t>(std::floor(static_cast<double>(a) * std::sqrt(ln_n)));
  }
};

namespace detail {

inline std::size_t r_edges_between(const Graph& g, const EdgeVector& r, const VertexSet& a, const VertexSet& b) {
  std::size_t c = 0;
  r.for_each([&](std::size_t id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) ++c;
  });
  return c;
}

/// Vertices outside `a`, sorted by deg(v, a) descending (ties by id).
inline std::vector<std::pair<std::size_t, Vertex>> outside_by_degree(const Graph& g, const VertexSet& a) {
  std::vector<std::size_t> d(g.order(), 0);
  a.for_each([&](std::size_t v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) ++d[w];
  });
  std::vector<std::pair<std::size_t, Vertex>> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!a.contains(v)) out.push_back({d[v], v});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first != y.first ? x.first > y.first : x.second < y.second; });
  return out;
}

inline VertexSet take(std::size_t n, const std::vector<std::pair<std::size_t, Vertex>>& ranked, std::size_t from, std::size_t count) {
  VertexSet s(n);
  for (std::size_t i = from; i < from + count; ++i) s.insert(ranked[i].second);
  return s;
}

/// Shortest cycle through u of length <= limit, or nullopt: BFS from u
/// labels each vertex with the neighbor of u it descends from; an edge
/// joining two different branches closes a cycle through u.
inline std::optional<Path> short_cycle_through(const Graph& g, Vertex u, std::size_t limit) {
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(g.order(), none), branch(g.order(), none);
  std::vector<std::size_t> dist(g.order(), 0);
  parent[u] = u;
  std::deque<Vertex> queue;
  for (Vertex w : g.neighbors(u)) {
    parent[w] = u;
    branch[w] = w;
    dist[w] = 1;
    queue.push_back(w);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::pair<Vertex, Vertex> best_edge{none, none};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (2 * dist[v] + 1 > std::min(best, limit + 1)) break;
    for (Vertex w : g.neighbors(v)) {
      if (w == u) continue;
      if (parent[w] == none) {
        parent[w] = v;
        branch[w] = branch[v];
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      } else if (branch[w] != branch[v] && dist[v] + dist[w] + 1 < best) {
        best = dist[v] + dist[w] + 1;
        best_edge = {v, w};
      }
    }
  }
  if (best > limit) return std::nullopt;
  Path left, right;
  for (Vertex v = best_edge.first; v != u; v = parent[v]) left.push_back(v);
  for (Vertex v = best_edge.second; v != u; v = parent[v]) right.push_back(v);
  Path cycle{u};
  cycle.insert(cycle.end(), left.rbegin(), left.rend());
  cycle.insert(cycle.end(), right.begin(), right.end());
  cycle.push_back(u);
  return cycle;
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace detail

/// The property report: maximum degree (P1), SMALL closure size (P2), short
/// paths and cycles between SMALL vertices (P3), local sparsity (P4, P5),
/// edge-count concentration (P6), the half-degree property, minimum degree
/// >= 3, and (when r is given) an R-edge between any two disjoint sets of
/// size ceil(2n/5).
///
/// P1-P3 and minimum degree are exact. The set-quantified properties are
/// exact for n <= exact_limit and otherwise sampled over the first set; where
/// the optimal second set is determined by degree counts it is chosen
/// exactly, so a sampled violation is always genuine.
inline PropertyReport property_report(const Graph& g, const std::optional<EdgeVector>& r = std::nullopt,
                                      const PropertyOptions& opt = {}) {
  const std::size_t n = g.order();
  if (n < 3) throw std::invalid_argument("property_report requires n >= 3");
  if (!(opt.delta > 0.0 && opt.delta < 0.25)) throw std::invalid_argument("delta must lie in (0, 1/4)");
  if (r && r->universe() != g.size()) throw std::invalid_argument("dimension mismatch");
  if (opt.exact_limit > 20) throw std::invalid_argument("exact_limit above 20 is not supported");
  const auto bounds = PropertyBounds::of(n, opt.delta);
  PropertyReport rep;
  rep.n = n;
  rep.delta = opt.delta;
  rep.p = opt.p.value_or(static_cast<double>(g.size()) / (static_cast<double>(n) * (n - 1) / 2.0));
  const bool exact = n <= opt.exact_limit;
  const VertexSet small = small_vertices(g);

  // P1
  {
    PropertyCheck c = named_check("P1", true);
    Vertex top = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g.degree(v) > g.degree(top)) top = v;
    c.holds = static_cast<double>(g.degree(top)) <= bounds.max_degree;
    c.detail = "max degree " + std::to_string(g.degree(top)) + " vs 10 ln n = " + detail::fmt(bounds.max_degree);
    if (!c.holds) c.vertex = top;
    rep.checks.push_back(c);
  }
  // P2
  {
    PropertyCheck c = named_check("P2", true);
    VertexSet closure = small | external_neighborhood(g, small);
    c.holds = static_cast<double>(closure.count()) <= bounds.small_closure;
    c.detail = "|SMALL ∪ N(SMALL)| = " + std::to_string(closure.count()) + " vs sqrt n = " + detail::fmt(bounds.small_closure);
    if (!c.holds) c.sets = {closure};
    rep.checks.push_back(c);
  }
  // P3
  {
    PropertyCheck c = named_check("P3", true);
    const auto limit = static_cast<std::size_t>(std::floor(bounds.short_path));
    c.vacuous = limit < 1;
    c.detail = "length window [1, " + detail::fmt(bounds.short_path) + "]";
    if (!c.vacuous) {
      small.for_each([&](std::size_t u) {
        if (!c.holds) return;
        VertexSet others = small;
        others.erase(u);
        // Distinct endpoints: BFS avoiding nothing, stop at the first SMALL vertex.
        for (std::size_t v = others.next(0); v < n; v = others.next(v + 1)) {
          auto p = bfs_path(g, static_cast<Vertex>(u), static_cast<Vertex>(v), VertexSet(n));
          if (p && p->size() - 1 <= limit) {
            c.holds = false;
            c.path = *p;
            return;
          }
        }
        if (auto cyc = detail::short_cycle_through(g, static_cast<Vertex>(u), limit)) {
          c.holds = false;
          c.path = *cyc;
        }
      });
    }
    rep.checks.push_back(c);
  }
  // Minimum degree
  {
    PropertyCheck c = named_check("min_degree_3", true);
    Vertex low = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g.degree(v) < g.degree(low)) low = v;
    c.holds = g.degree(low) >= 3;
    c.detail = "min degree " + std::to_string(g.degree(low));
    if (!c.holds) c.vertex = low;
    rep.checks.push_back(c);
  }

  // Set-quantified properties. `visit_first` enumerates (exact) or samples the
  // first set with sizes in [lo, hi].
  Rng rng(opt.seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  auto random_set = [&](std::size_t k) {
    VertexSet s(n);
    if (rng.bernoulli(0.5)) {
      rng.shuffle(order);
      for (std::size_t i = 0; i < k; ++i) s.insert(order[i]);
    } else {
      // BFS ball from a random vertex, padded randomly: a dense local set.
      std::deque<Vertex> queue{static_cast<Vertex>(rng.below(n))};
      s.insert(queue.front());
      while (!queue.empty() && s.count() < k) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v))
          if (s.count() < k && !s.contains(w)) {
            s.insert(w);
            queue.push_back(w);
          }
      }
      rng.shuffle(order);
      for (std::size_t i = 0; s.count() < k; ++i) s.insert(order[i]);
    }
    return s;
  };
  auto visit_first = [&](std::size_t lo, std::size_t hi, const auto& check) {
    hi = std::min(hi, n);
    if (lo < 1) lo = 1;
    if (lo > hi) return;
    if (exact) {
      for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        auto k = static_cast<std::size_t>(std::popcount(mask));
        if (k < lo || k > hi) continue;
        VertexSet a(n);
        for (std::size_t v = 0; v < n; ++v)
          if (mask >> v & 1u) a.insert(v);
        if (!check(a)) return;
      }
    } else {
      for (std::size_t s = 0; s < opt.samples; ++s)
        if (!check(random_set(lo + static_cast<std::size_t>(rng.below(hi - lo + 1))))) return;
    }
  };

  // P4
  {
    PropertyCheck c = named_check("P4", exact);
    const auto hi = static_cast<std::size_t>(std::floor(bounds.sparse_size));
    c.vacuous = hi < 1;
    c.detail = "|A| <= " + detail::fmt(bounds.sparse_size) + ", e(A) <= " + detail::fmt(bounds.sparse_ratio) + "|A|";
    visit_first(1, hi, [&](const VertexSet& a) {
      if (static_cast<double>(edges_within(g, a)) <= static_cast<double>(a.count()) * bounds.sparse_ratio) return true;
      c.holds = false;
      c.sets = {a};
      return false;
    });
    rep.checks.push_back(c);
  }
  // P5: for fixed A the worst B takes the b outside vertices with most
  // neighbors in A.
  {
    PropertyCheck c = named_check("P5", exact);
    std::size_t hi = static_cast<std::size_t>(std::floor(bounds.sparse_size));
    while (hi >= 1 && hi + bounds.p5_partner(hi) > n) --hi;
    c.vacuous = hi < 1;
    c.detail = "|A| <= " + detail::fmt(bounds.sparse_size) + ", |B| = floor(|A| sqrt(ln n)), e(A,B) <= " +
               detail::fmt(bounds.sparse_ratio) + "|A|";
    visit_first(1, hi, [&](const VertexSet& a) {
      const std::size_t b = bounds.p5_partner(a.count());
      if (b == 0) return true;
      auto ranked = detail::outside_by_degree(g, a);
      std::size_t e = 0;
      for (std::size_t i = 0; i < b; ++i) e += ranked[i].first;
      if (static_cast<double>(e) <= static_cast<double>(a.count()) * bounds.sparse_ratio) return true;
      c.holds = false;
      c.sets = {a, detail::take(n, ranked, 0, b)};
      return false;
    });
    rep.checks.push_back(c);
  }
  // P6: for fixed A and |B| = b, the extreme e(A,B) come from the top and
  // bottom b outside vertices by degree into A.
  {
    PropertyCheck c = named_check("P6", exact);
    const std::size_t lo = std::max<std::size_t>(bounds.p6_min, 1);
    c.vacuous = 2 * lo > n;
    c.detail = "|A|, |B| >= " + std::to_string(lo) + ", p = " + detail::fmt(rep.p);
    visit_first(lo, n - lo, [&](const VertexSet& a) {
      auto ranked = detail::outside_by_degree(g, a);
      const std::size_t outside = ranked.size();
      std::vector<std::size_t> prefix(outside + 1, 0);
      for (std::size_t i = 0; i < outside; ++i) prefix[i + 1] = prefix[i] + ranked[i].first;
      for (std::size_t b = lo; b <= outside; ++b) {
        const double expect = static_cast<double>(a.count() * b) * rep.p;
        const std::size_t most = prefix[b], least = prefix[outside] - prefix[outside - b];
        if (static_cast<double>(most) > 1.001 * expect) {
          c.holds = false;
          c.sets = {a, detail::take(n, ranked, 0, b)};
          return false;
        }
        if (static_cast<double>(least) < 0.999 * expect) {
          c.holds = false;
          c.sets = {a, detail::take(n, ranked, outside - b, b)};
          return false;
        }
      }
      return true;
    });
    rep.checks.push_back(c);
  }
  // Half-degree: for every A of size half_a and B ⊆ V \ A of size half_b,
  // some u in A has deg(u, B) >= (1 + delta) deg(u) / 2. Exact mode tries
  // every B; sampled mode builds B greedily from the outside vertices with
  // the fewest neighbors in A.
  {
    PropertyCheck c = named_check("half_degree", exact);
    const std::size_t a_size = std::max<std::size_t>(bounds.half_a, 1), b_size = bounds.half_b;
    c.vacuous = a_size + b_size > n;
    c.detail = "|A| = " + std::to_string(a_size) + ", |B| = " + std::to_string(b_size) + ", delta = " + detail::fmt(opt.delta);
    auto defeats = [&](const VertexSet& a, const VertexSet& b) {
      bool some = false;
      a.for_each([&](std::size_t u) {
        if (2.0 * static_cast<double>(degree_into(g, static_cast<Vertex>(u), b)) >=
            (1.0 + opt.delta) * static_cast<double>(g.degree(static_cast<Vertex>(u))))
          some = true;
      });
      return !some;
    };
    if (!c.vacuous) {
      visit_first(a_size, a_size, [&](const VertexSet& a) {
        if (exact) {
          std::uint32_t outside = 0;
          for (std::size_t v = 0; v < n; ++v)
            if (!a.contains(v)) outside |= std::uint32_t{1} << v;
          for (std::uint32_t sub = outside; sub; sub = (sub - 1) & outside) {
            if (static_cast<std::size_t>(std::popcount(sub)) != b_size) continue;
            VertexSet b(n);
            for (std::size_t v = 0; v < n; ++v)
              if (sub >> v & 1u) b.insert(v);
            if (defeats(a, b)) {
              c.holds = false;
              c.sets = {a, b};
              return false;
            }
          }
          return true;
        }
        auto ranked = detail::outside_by_degree(g, a);
        VertexSet b = detail::take(n, ranked, ranked.size() - b_size, b_size);
        if (!defeats(a, b)) return true;
        c.holds = false;
        c.sets = {a, b};
        return false;
      });
    }
    rep.checks.push_back(c);
  }
  // Robust edge: some R-edge between any disjoint A, B of size ceil(2n/5).
  // For fixed A the best B avoids A ∪ N_R(A).
  if (r) {
    PropertyCheck c = named_check("robust_edge", exact);
    const std::size_t s = bounds.robust_size;
    c.vacuous = 2 * s > n;
    c.detail = "|A| = |B| = " + std::to_string(s);
    std::vector<std::vector<Vertex>> r_adj(n);
    r->for_each([&](std::size_t id) {
      const Edge& e = g.edge(static_cast<EdgeId>(id));
      r_adj[e.u].push_back(e.v);
      r_adj[e.v].push_back(e.u);
    });
    if (!c.vacuous) {
      visit_first(s, s, [&](const VertexSet& a) {
        VertexSet blocked = a;
        a.for_each([&](std::size_t v) {
          for (Vertex w : r_adj[v]) blocked.insert(w);
        });
        VertexSet free_set = blocked.complement();
        if (free_set.count() < s) return true;
        VertexSet b(n);
        for (std::size_t v = free_set.next(0); b.count() < s; v = free_set.next(v + 1)) b.insert(v);
        c.holds = false;
        c.sets = {a, b};
        return false;
      });
    }
    rep.checks.push_back(c);
  }
  return rep;
}

/// Recomputes a reported violation from its witness alone. True iff the
/// witness really violates the named property.
inline bool reverify_violation(const Graph& g, const PropertyReport& rep, const PropertyCheck& c,
                               const std::optional<EdgeVector>& r = std::nullopt) {
  if (c.holds) return false;
  const auto b = PropertyBounds::of(g.order(), rep.delta);
  const VertexSet small = small_vertices(g);
  if (c.name == "P1") return c.vertex && static_cast<double>(g.degree(*c.vertex)) > b.max_degree;
  if (c.name == "P2")
    return c.sets.size() == 1 && c.sets[0] == (small | external_neighborhood(g, small)) &&
           static_cast<double>(c.sets[0].count()) > b.small_closure;
  if (c.name == "P3") {
    if (!c.path || c.path->size() < 2) return false;
    const Path& p = *c.path;
    const std::size_t len = p.size() - 1;
    if (!small.contains(p.front()) || !small.contains(p.back()) || static_cast<double>(len) > b.short_path) return false;
    for (std::size_t i = 1; i < p.size(); ++i)
      if (!g.adjacent(p[i - 1], p[i])) return false;
    Path body = p;
    if (p.front() == p.back()) body.pop_back();
    VertexSet seen(g.order());
    for (Vertex v : body) {
      if (seen.contains(v)) return false;
      seen.insert(v);
    }
    return true;
  }
  if (c.name == "min_degree_3") return c.vertex && g.degree(*c.vertex) < 3;
  if (c.name == "P4")
    return c.sets.size() == 1 && static_cast<double>(c.sets[0].count()) <= b.sparse_size &&
           static_cast<double>(edges_within(g, c.sets[0])) > static_cast<double>(c.sets[0].count()) * b.sparse_ratio;
  if (c.name == "P5") {
    if (c.sets.size() != 2 || c.sets[0].intersects(c.sets[1])) return false;
    const std::size_t a = c.sets[0].count();
    return static_cast<double>(a) <= b.sparse_size && c.sets[1].count() == b.p5_partner(a) &&
           static_cast<double>(edges_between(g, c.sets[0], c.sets[1])) > static_cast<double>(a) * b.sparse_ratio;
  }
  if (c.name == "P6") {
    if (c.sets.size() != 2 || c.sets[0].intersects(c.sets[1])) return false;
    const std::size_t x = c.sets[0].count(), y = c.sets[1].count();
    if (x < b.p6_min || y < b.p6_min) return false;
    const double expect = static_cast<double>(x * y) * rep.p, e = static_cast<double>(edges_between(g, c.sets[0], c.sets[1]));
    return e < 0.999 * expect || e > 1.001 * expect;
  }
  if (c.name == "half_degree") {
    if (c.sets.size() != 2 || c.sets[0].intersects(c.sets[1])) return false;
    if (c.sets[0].count() != std::max<std::size_t>(b.half_a, 1) || c.sets[1].count() != b.half_b) return false;
    bool some = false;
    c.sets[0].for_each([&](std::size_t u) {
      if (2.0 * static_cast<double>(degree_into(g, static_cast<Vertex>(u), c.sets[1])) >=
          (1.0 + rep.delta) * static_cast<double>(g.degree(static_cast<Vertex>(u))))
        some = true;
    });
    return !some;
  }
  if (c.name == "robust_edge") {
    if (!r || c.sets.size() != 2 || c.sets[0].intersects(c.sets[1])) return false;
    return c.sets[0].count() == b.robust_size && c.sets[1].count() == b.robust_size &&
           detail::r_edges_between(g, *r, c.sets[0], c.sets[1]) == 0;
  }
  return false;
}

}  // namespace hamspan
