#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/linkage.hpp"
#include "hamspan/result.hpp"
#include "hamspan/rng.hpp"

namespace hamspan {

// ---------------------------------------------------------------------------
// Rotation-extension

struct RotationStats {
  std::uint64_t steps = 0;
  std::size_t attempts = 0;
};

/// Pósa rotation-extension search for Hamilton paths with prescribed
/// endpoints. Construct once per graph and call find() repeatedly.
///
/// An attempt anchors one endpoint at position 0 and grows the path from the
/// other end, choosing the extension with the fewest free neighbors. When the
/// free end is stuck it rotates: for a neighbor w of the end e, the segment
/// after w is reversed, making w's old successor the new end. Once the path is
/// Hamilton, rotations continue until the target endpoint is exposed. An
/// attempt that goes budget/10 steps without progress is abandoned and the
/// next one anchors the other endpoint.
class RotationExtension {
 public:
  explicit RotationExtension(const Graph& g)
      : g_(g), n_(g.order()), words_((g.order() + 63) / 64), adj_(g.order() * ((g.order() + 63) / 64), 0) {
    for (const auto& e : g.edges()) {
      adj_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      adj_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u * words_ + v / 64] >> (v % 64)) & 1u; }

  std::optional<Path> find(Vertex x, Vertex y, std::uint64_t budget, std::uint64_t seed, RotationStats* stats = nullptr) {
    if (x >= n_ || y >= n_) throw std::out_of_range("rotation_extension_path endpoint out of range");
    if (x == y) throw std::invalid_argument("rotation_extension_path requires x != y");
    RotationStats local;
    RotationStats& st = stats ? *stats : local;
    st = {};
    if (!plausible(x, y)) return std::nullopt;

    Rng rng(seed);
    const std::uint64_t stall_limit = std::max<std::uint64_t>(budget / 10, 1);
    bool from_x = true;
    while (st.steps < budget) {
      ++st.attempts;
      Vertex anchor = from_x ? x : y, target = from_x ? y : x;
      if (attempt(anchor, target, budget, stall_limit, rng, st)) {
        Path p = path_;
        if (!from_x) std::reverse(p.begin(), p.end());
        if (!is_hamilton_path(g_, p, x, y)) throw std::logic_error("rotation-extension produced an invalid path");
        return p;
      }
      from_x = !from_x;
    }
    return std::nullopt;
  }

 private:
  // Cheap necessary conditions: connected, no isolated vertex, and only x, y
  // may have degree 1.
  bool plausible(Vertex x, Vertex y) const {
    if (n_ == 2) return adjacent(x, y);
    for (Vertex v = 0; v < n_; ++v) {
      if (g_.degree(v) == 0) return false;
      if (g_.degree(v) == 1 && v != x && v != y) return false;
    }
    return is_connected(g_);
  }

  void push(Vertex v) {
    pos_[v] = static_cast<std::int64_t>(path_.size());
    path_.push_back(v);
    for (Vertex w : g_.neighbors(v)) --free_[w];
  }

  // Rotate with pivot at path index i: reverse path_[i+1..end].
  void rotate_at(std::size_t i) {
    std::reverse(path_.begin() + static_cast<std::ptrdiff_t>(i + 1), path_.end());
    for (std::size_t k = i + 1; k < path_.size(); ++k) pos_[path_[k]] = static_cast<std::int64_t>(k);
  }

  bool attempt(Vertex anchor, Vertex target, std::uint64_t budget, std::uint64_t stall_limit, Rng& rng, RotationStats& st) {
    path_.clear();
    pos_.assign(n_, -1);
    free_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) free_[v] = g_.degree(v);
    push(anchor);
    std::uint64_t stall = 0;
    std::vector<Vertex> cand;
    std::vector<std::size_t> pivots, preferred;

    while (st.steps < budget && stall < stall_limit) {
      const Vertex e = path_.back();
      if (path_.size() == n_) {
        if (e == target) return true;
        const std::size_t pt = static_cast<std::size_t>(pos_[target]);
        if (adjacent(e, path_[pt - 1])) {
          rotate_at(pt - 1);
          ++st.steps;
          return true;
        }
      } else {
        // Extension: fewest free neighbors first; keep the target for last.
        cand.clear();
        std::size_t best = std::numeric_limits<std::size_t>::max();
        const bool last = path_.size() + 1 == n_;
        for (Vertex w : g_.neighbors(e)) {
          if (pos_[w] >= 0 || (w == target && !last)) continue;
          if (free_[w] < best) {
            best = free_[w];
            cand.assign(1, w);
          } else if (free_[w] == best) {
            cand.push_back(w);
          }
        }
        if (!cand.empty()) {
          push(cand.size() == 1 ? cand[0] : rng.pick(cand));
          ++st.steps;
          stall = 0;
          continue;
        }
      }
      // Rotation. Pivots are on-path neighbors of e other than its predecessor.
      pivots.clear();
      preferred.clear();
      const std::size_t last_idx = path_.size() - 1;
      for (Vertex w : g_.neighbors(e)) {
        if (pos_[w] < 0) continue;
        auto i = static_cast<std::size_t>(pos_[w]);
        if (i + 1 >= last_idx) continue;
        pivots.push_back(i);
        Vertex new_end = path_[i + 1];
        if (path_.size() < n_ && free_[new_end] > (adjacent(new_end, target) ? 1u : 0u)) preferred.push_back(i);
      }
      if (pivots.empty()) return false;
      rotate_at(preferred.empty() ? rng.pick(pivots) : rng.pick(preferred));
      ++st.steps;
      ++stall;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> adj_;
  Path path_;
  std::vector<std::int64_t> pos_;
  std::vector<std::size_t> free_;
};

/// Hamilton path of g from x to y, or nullopt when the step budget runs out.
/// A nullopt is not a proof that none exists.
inline std::optional<Path> rotation_extension_path(const Graph& g, Vertex x, Vertex y, std::uint64_t budget,
                                                   std::uint64_t seed, RotationStats* stats = nullptr) {
  RotationExtension search(g);
  return search.find(x, y, budget, seed, stats);
}

// ---------------------------------------------------------------------------
// Degree-preserving random split

struct SplitRequest {
  VertexSet target;  // Y
  std::size_t a = 0;
  std::size_t b = 0;
  /// Vertices whose floors are enforced; all of V when unset.
  std::optional<VertexSet> constrained;
};

struct Split {
  VertexSet a;
  VertexSet b;
  std::size_t resamples = 0;
};

/// True iff deg(v,A) >= a/(3m) deg(v,Y) and deg(v,B) >= b/(3m) deg(v,Y),
/// compared exactly in integers.
inline bool split_floor_holds(std::size_t deg_side, std::size_t side, std::size_t deg_y, std::size_t m) {
  return 3 * m * deg_side >= side * deg_y;
}

/// Partition Y = A ∪ B with |A| = a, |B| = b and, for every constrained
/// vertex v, deg(v,A) >= a/(3m)·deg(v,Y) and deg(v,B) >= b/(3m)·deg(v,Y).
/// Uniform a-subsets are resampled until every floor holds.
inline Result<Split> lll_split(const Graph& g, const SplitRequest& req, std::size_t retries, std::uint64_t seed) {
  if (req.target.universe() != g.order()) throw std::invalid_argument("split target has wrong universe");
  const std::size_t m = req.target.count();
  if (req.a == 0 || req.b == 0) throw std::invalid_argument("split sizes a, b must be positive");
  if (req.a + req.b != m) throw std::invalid_argument("split sizes must satisfy a + b = |Y|");

  const VertexSet constrained = req.constrained.value_or(VertexSet::full(g.order()));
  std::vector<Vertex> ys;
  req.target.for_each([&](std::size_t v) { ys.push_back(static_cast<Vertex>(v)); });
  std::vector<std::size_t> deg_y(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) deg_y[v] = degree_into(g, v, req.target);

  Rng rng(seed);
  std::string last_violation = "no attempts made";
  std::vector<std::size_t> deg_a(g.order());
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(retries, 1); ++attempt) {
    rng.shuffle(ys);
    VertexSet a(g.order());
    for (std::size_t i = 0; i < req.a; ++i) a.insert(ys[i]);
    std::fill(deg_a.begin(), deg_a.end(), 0);
    a.for_each([&](std::size_t v) {
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) ++deg_a[w];
    });
    bool ok = true;
    for (Vertex v = 0; v < g.order() && ok; ++v) {
      if (!constrained.contains(v)) continue;
      std::size_t da = deg_a[v], db = deg_y[v] - deg_a[v];
      if (!split_floor_holds(da, req.a, deg_y[v], m) || !split_floor_holds(db, req.b, deg_y[v], m)) {
        ok = false;
        last_violation = "vertex " + std::to_string(v) + ": deg(v,A)=" + std::to_string(da) +
                         ", deg(v,B)=" + std::to_string(db) + ", deg(v,Y)=" + std::to_string(deg_y[v]);
      }
    }
    if (ok) return Split{a, req.target - a, attempt};
  }
  return Failure{"split", "retries exhausted; last violation at " + last_violation};
}

// ---------------------------------------------------------------------------
// Short paths inside R

/// Shortest x-y path using only edges of r and avoiding `avoid` (x and y are
/// always admitted). Neighbors are expanded in ascending id order.
inline std::optional<Path> short_path_in_r(const Graph& g, const EdgeVector& r, Vertex x, Vertex y, const VertexSet& avoid) {
  if (r.universe() != g.size()) throw std::invalid_argument("dimension mismatch");
  if (avoid.contains(x) || avoid.contains(y)) throw std::invalid_argument("short_path_in_r endpoints must not be avoided");
  if (x == y) return Path{x};
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> parent(g.order(), none);
  parent[x] = x;
  std::deque<Vertex> queue{x};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    auto nb = g.neighbors(v);
    auto ids = g.incident(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      Vertex w = nb[i];
      if (!r.contains(ids[i]) || parent[w] != none || (avoid.contains(w) && w != y)) continue;
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

/// 5·ln n / ln ln n, the length bound for short R-paths in the threshold regime.
inline double short_path_cap(std::size_t n) {
  const double ln = std::log(static_cast<double>(n));
  return 5.0 * ln / std::log(ln);
}

// ---------------------------------------------------------------------------
// Hamilton paths with protected low-degree vertices

struct ProtectedOptions {
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000;  // rotation-extension steps per closing path
  std::size_t attempts = 8;
  std::size_t split_retries = 10'000;
  std::size_t linkage_retries = 200;
  /// Overrides small_vertices(g), e.g. to protect vertices of a small graph.
  std::optional<VertexSet> small;
};

/// Hamilton path of G[S] from x to y that routes every SMALL vertex u_i of S
/// through a pair of escorts x_i - u_i - y_i.
///
/// Pipeline: pick escorts; split S minus the escorts into S1, S2; link
/// y_t->y and x_i->y_{i-1} (i >= 2) by disjoint paths inside S1 plus the
/// linkage endpoints; close with a rotation-extension path x->x_1 through
/// everything left. Throws std::invalid_argument when the preconditions fail.
inline Result<Path> hamilton_path_protected(const Graph& g, const VertexSet& s, Vertex x, Vertex y,
                                            const ProtectedOptions& opt = {}) {
  if (s.universe() != g.order()) throw std::invalid_argument("S has wrong universe");
  if (x == y) throw std::invalid_argument("hamilton_path_protected requires x != y");
  if (!s.contains(x) || !s.contains(y)) throw std::invalid_argument("x and y must lie in S");
  const VertexSet small = opt.small.value_or(small_vertices(g));
  if (small.contains(x) || small.contains(y)) throw std::invalid_argument("x and y must not be SMALL");
  VertexSet s_minus_xy = s;
  s_minus_xy.erase(x);
  s_minus_xy.erase(y);
  std::vector<Vertex> protected_vertices;
  (s & small).for_each([&](std::size_t u) {
    if (degree_into(g, static_cast<Vertex>(u), s_minus_xy) < 2)
      throw std::invalid_argument("SMALL vertex " + std::to_string(u) + " has fewer than 2 neighbors in S \\ {x,y}");
    protected_vertices.push_back(static_cast<Vertex>(u));
  });

  auto close_path = [&](const VertexSet& keep, Vertex from, Vertex to, std::uint64_t seed) -> std::optional<Path> {
    auto sub = restrict(g, keep);
    auto p = rotation_extension_path(sub.graph, sub.inverse[from], sub.inverse[to], opt.budget, seed);
    if (!p) return std::nullopt;
    return sub.lift(*p);
  };

  if (protected_vertices.empty()) {
    auto p = close_path(s, x, y, opt.seed);
    if (!p) return Failure{"closing path", "rotation-extension budget exhausted on G[S]"};
    return *p;
  }

  const std::size_t t = protected_vertices.size();
  Failure last{"escort selection", "no attempt made"};
  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(opt.attempts, 1); ++attempt) {
    Rng rng(derive_seed(opt.seed, attempt));

    // (i) escorts x_i, y_i in N(u_i) ∩ S, outside SMALL ∪ {x, y}, all distinct.
    VertexSet taken(g.order());
    taken.insert(x);
    taken.insert(y);
    std::vector<Vertex> ex(t), ey(t);
    bool escorts_ok = true;
    for (std::size_t i = 0; i < t && escorts_ok; ++i) {
      std::vector<Vertex> options;
      for (Vertex w : g.neighbors(protected_vertices[i]))
        if (s.contains(w) && !small.contains(w) && !taken.contains(w)) options.push_back(w);
      if (options.size() < 2) {
        escorts_ok = false;
        last = {"escort selection", "SMALL vertex " + std::to_string(protected_vertices[i]) + " lacks two free escorts"};
        break;
      }
      if (attempt > 0) rng.shuffle(options);
      ex[i] = options[0];
      ey[i] = options[1];
      taken.insert(ex[i]);
      taken.insert(ey[i]);
    }
    if (!escorts_ok) continue;

    // (ii) split S \ U.
    VertexSet u_set(g.order());
    for (std::size_t i = 0; i < t; ++i) {
      u_set.insert(protected_vertices[i]);
      u_set.insert(ex[i]);
      u_set.insert(ey[i]);
    }
    VertexSet rest = s - u_set;
    rest.erase(y);  // y is a linkage endpoint and joins S1 explicitly below
    VertexSet s1(g.order());
    if (rest.count() >= 2) {
      VertexSet constrained(g.order());
      (s - small).for_each([&](std::size_t v) {
        if (degree_into(g, static_cast<Vertex>(v), rest) >= 2) constrained.insert(v);
      });
      SplitRequest req{rest, (rest.count() + 1) / 2, rest.count() / 2, constrained};
      auto split = lll_split(g, req, opt.split_retries, rng.next());
      if (!split) {
        last = split.failure();
        continue;
      }
      s1 = split->a;
    } else {
      s1 = rest;
    }
    if (s1.contains(x)) s1.erase(x);

    // (iii) linkage inside G1 = G[S1 ∪ L], L = {y_1, x_2, y_2, ..., x_t, y_t, y}.
    VertexSet g1_vertices = s1;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.push_back({ey[t - 1], y});
    for (std::size_t i = 1; i < t; ++i) pairs.push_back({ex[i], ey[i - 1]});
    for (const auto& [a, b] : pairs) {
      g1_vertices.insert(a);
      g1_vertices.insert(b);
    }
    auto g1 = restrict(g, g1_vertices);
    std::vector<std::pair<Vertex, Vertex>> local_pairs;
    for (const auto& [a, b] : pairs) local_pairs.push_back({g1.inverse[a], g1.inverse[b]});
    auto links = disjoint_pair_paths(g1.graph, local_pairs, VertexSet(g1.graph.order()),
                                     LinkageOptions{rng.next(), opt.linkage_retries});
    if (!links) {
      last = {"linkage", "no disjoint escort linkage found inside S1"};
      continue;
    }

    // (iv) closing path x -> x_1 through W = S minus linkage paths and SMALL vertices.
    VertexSet w = s;
    for (const auto& p : *links)
      for (Vertex v : p) w.erase(g1.vertex_map[v]);
    for (Vertex u : protected_vertices) w.erase(u);
    auto closing = close_path(w, x, ex[0], rng.next());
    if (!closing) {
      last = {"closing path", "rotation-extension budget exhausted on the remainder"};
      continue;
    }

    // (v) x ... x_1 u_1 y_1 ~ x_2 u_2 y_2 ~ ... ~ x_t u_t y_t ~ y.
    Path out = *closing;
    for (std::size_t i = 0; i < t; ++i) {
      out.push_back(protected_vertices[i]);
      out.push_back(ey[i]);
      Path link = g1.lift(i + 1 < t ? (*links)[i + 1] : (*links)[0]);
      if (i + 1 < t) std::reverse(link.begin(), link.end());  // stored x_{i+1} -> y_i
      out.insert(out.end(), link.begin() + 1, link.end());
    }
    if (!is_hamilton_path_of(g, out, s, x, y)) throw std::logic_error("protected Hamilton path failed verification");
    return out;
  }
  return last;
}

// ---------------------------------------------------------------------------
// Expander and robust-expansion checks

struct ExpanderParams {
  double c = 1.0;      // (E1)/(E2) expansion factor
  std::size_t n0 = 4;  // robust expansion applies to |X| <= n0
  double d = 3.0;      // robust expansion demands |N(X)| >= 2d|X|
  double alpha = 0.0;  // each x may lose up to alpha·deg(x) edges

  void validate() const {
    if (!(c > 0)) throw std::invalid_argument("expander parameter c must be positive");
    if (!(d >= 3.0 && d < static_cast<double>(n0))) throw std::invalid_argument("expander parameters need 3 <= d < n0");
    if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("expander parameter alpha must lie in [0, 1)");
  }
};

enum class CheckMode { exact, sample };
enum class CheckStatus { holds, violated, no_counterexample_found };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::holds: return "holds";
    case CheckStatus::violated: return "violated";
    case CheckStatus::no_counterexample_found: return "no_counterexample_found";
  }
  return "?";
}

struct ExpanderReport {
  CheckMode mode = CheckMode::exact;
  CheckStatus e1 = CheckStatus::holds;
  CheckStatus e2 = CheckStatus::holds;
  CheckStatus robust = CheckStatus::holds;
  /// The edge-deletion adversary for the robust check is greedy, so even in
  /// exact mode a "holds" there is only as strong as that adversary.
  bool robust_heuristic = true;
  std::optional<VertexSet> e1_witness;
  std::optional<std::pair<VertexSet, VertexSet>> e2_witness;
  std::optional<VertexSet> robust_witness;
  std::optional<EdgeVector> robust_deleted;
};

namespace detail {

/// Greedy adversary: delete up to floor(alpha·deg(x)) edges at each x in X so
/// as to cut off the cheapest external neighbors entirely. Returns the deleted
/// edges and the surviving neighborhood size.
inline std::pair<EdgeVector, std::size_t> greedy_deletion(const Graph& g, const VertexSet& x, double alpha) {
  std::vector<std::size_t> allowance(g.order(), 0);
  x.for_each([&](std::size_t v) {
    allowance[v] = static_cast<std::size_t>(std::floor(alpha * static_cast<double>(g.degree(static_cast<Vertex>(v)))));
  });
  VertexSet nbhd = external_neighborhood(g, x);
  std::vector<std::pair<std::size_t, Vertex>> cost;
  nbhd.for_each([&](std::size_t w) {
    cost.push_back({degree_into(g, static_cast<Vertex>(w), x), static_cast<Vertex>(w)});
  });
  std::sort(cost.begin(), cost.end());
  EdgeVector deleted(g.size());
  std::size_t survivors = cost.size();
  for (const auto& [c, w] : cost) {
    bool affordable = true;
    auto nb = g.neighbors(w);
    for (Vertex v : nb)
      if (x.contains(v) && allowance[v] == 0) affordable = false;
    if (!affordable) continue;
    auto ids = g.incident(w);
    for (std::size_t i = 0; i < nb.size(); ++i)
      if (x.contains(nb[i])) {
        --allowance[nb[i]];
        deleted.insert(ids[i]);
      }
    --survivors;
  }
  return {deleted, survivors};
}

inline VertexSet set_from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1u) s.insert(v);
  return s;
}

}  // namespace detail

/// (E1) |N(X)| >= c|X| for |X| < n/(2c); (E2) an edge between any two
/// disjoint sets of size >= n/(2c); robust expansion |N_{G\F}(X)| >= 2d|X|
/// for |X| <= n0 against the greedy deletion adversary.
///
/// Exact mode enumerates all subsets and needs n <= 20. Sample mode only
/// refutes: a found violation is certain, anything else is reported as
/// no_counterexample_found.
inline ExpanderReport expander_check(const Graph& g, const ExpanderParams& params, CheckMode mode, std::uint64_t seed,
                                     std::size_t samples = 10'000) {
  params.validate();
  const std::size_t n = g.order();
  const double small_bound = static_cast<double>(n) / (2.0 * params.c);
  // Smallest integer size counted as "large" for (E2).
  const std::size_t large = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(small_bound)));
  ExpanderReport rep;
  rep.mode = mode;

  auto check_e1 = [&](const VertexSet& x) {
    auto k = x.count();
    if (k == 0 || static_cast<double>(k) >= small_bound) return true;
    return static_cast<double>(external_neighborhood(g, x).count()) >= params.c * static_cast<double>(k);
  };
  // For X of size `large`, the vertices with no neighbor in X form the best Y.
  auto check_e2 = [&](const VertexSet& x) -> std::optional<VertexSet> {
    VertexSet rest = (x | external_neighborhood(g, x)).complement();
    if (rest.count() < large) return std::nullopt;
    VertexSet y(n);
    std::size_t taken = 0;
    rest.for_each([&](std::size_t v) {
      if (taken < large) {
        y.insert(v);
        ++taken;
      }
    });
    return y;
  };
  auto check_robust = [&](const VertexSet& x) {
    auto [deleted, survivors] = detail::greedy_deletion(g, x, params.alpha);
    bool ok = static_cast<double>(survivors) >= 2.0 * params.d * static_cast<double>(x.count());
    if (!ok && !rep.robust_witness) {
      rep.robust_witness = x;
      rep.robust_deleted = deleted;
    }
    return ok;
  };

  if (mode == CheckMode::exact) {
    if (n > 20) throw std::invalid_argument("exact expander check requires n <= 20");
    const std::uint32_t limit = n == 0 ? 1u : (1u << n);
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      const auto k = static_cast<std::size_t>(std::popcount(mask));
      bool need_e1 = rep.e1 == CheckStatus::holds && static_cast<double>(k) < small_bound;
      bool need_e2 = rep.e2 == CheckStatus::holds && k == large && 2 * large <= n;
      bool need_robust = rep.robust == CheckStatus::holds && k <= params.n0;
      if (!need_e1 && !need_e2 && !need_robust) continue;
      VertexSet x = detail::set_from_mask(n, mask);
      if (need_e1 && !check_e1(x)) {
        rep.e1 = CheckStatus::violated;
        rep.e1_witness = x;
      }
      if (need_e2)
        if (auto y = check_e2(x)) {
          rep.e2 = CheckStatus::violated;
          rep.e2_witness = {x, *y};
        }
      if (need_robust && !check_robust(x)) rep.robust = CheckStatus::violated;
    }
    return rep;
  }

  rep.e1 = rep.e2 = rep.robust = CheckStatus::no_counterexample_found;
  if (n == 0) return rep;
  Rng rng(seed);
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  auto random_set = [&](std::size_t k) {
    rng.shuffle(all);
    VertexSet s(n);
    for (std::size_t i = 0; i < k && i < n; ++i) s.insert(all[i]);
    return s;
  };
  const auto e1_max = static_cast<std::size_t>(std::ceil(small_bound)) - 1;  // sizes strictly below n/(2c)
  for (std::size_t it = 0; it < samples; ++it) {
    if (rep.e1 != CheckStatus::violated && e1_max >= 1) {
      auto x = random_set(1 + static_cast<std::size_t>(rng.below(std::min(e1_max, n))));
      if (!check_e1(x)) {
        rep.e1 = CheckStatus::violated;
        rep.e1_witness = x;
      }
    }
    if (rep.e2 != CheckStatus::violated && 2 * large <= n) {
      auto x = random_set(large);
      if (auto y = check_e2(x)) {
        rep.e2 = CheckStatus::violated;
        rep.e2_witness = {x, *y};
      }
    }
    if (rep.robust != CheckStatus::violated && params.n0 >= 1) {
      auto x = random_set(1 + static_cast<std::size_t>(rng.below(std::min(params.n0, n))));
      if (!check_robust(x)) rep.robust = CheckStatus::violated;
    }
  }
  return rep;
}

}  // namespace hamspan
