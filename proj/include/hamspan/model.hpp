#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamspan/graph.hpp"
#include "hamspan/rng.hpp"

namespace hamspan {

/// (ln n + 2 ln ln n + f)/n clamped to [0, 1]. Requires n >= 3 so that
/// ln ln n is defined.
inline double threshold_p(std::size_t n, double f) {
  if (n < 3) throw std::invalid_argument("threshold_p requires n >= 3");
  const double ln = std::log(static_cast<double>(n));
  return std::clamp((ln + 2.0 * std::log(ln) + f) / static_cast<double>(n), 0.0, 1.0);
}

struct ModelParams {
  std::size_t n = 3;
  double f = 0.0;
  /// Explicit edge probability; replaces the threshold formula when set.
  std::optional<double> p_override;
  std::uint64_t seed = 0;
  /// Even n is refused unless set (the obstruction tests need it).
  bool allow_even_n = false;

  double p() const { return p_override ? *p_override : threshold_p(n, f); }

  void validate() const {
    if (n < 3) throw std::invalid_argument("model requires n >= 3");
    if (n % 2 == 0 && !allow_even_n) throw std::invalid_argument("model requires odd n (even n needs the override)");
    if (p_override && !(*p_override >= 0.0 && *p_override <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  }
};

/// G(n, p): pairs (u, v), u < v, are visited in lexicographic order and each
/// is kept iff Rng(seed).unit() < p. Identical inputs give identical graphs.
inline Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.push_back({u, v});
  return Graph::from_edge_list(n, edges);
}

inline Graph sample_gnp(const ModelParams& params) {
  params.validate();
  return sample_gnp(params.n, params.p(), params.seed);
}

enum class TailKind { lower, upper };

/// ratio·ln(ratio) - ratio + 1, the exponent rate in both Chernoff tails.
inline double chernoff_rate(double ratio) { return ratio * std::log(ratio) - ratio + 1.0; }

/// exp(-(r ln r - r + 1)·mean): bounds P(X <= r·E X) for 0 < r < 1 (lower)
/// and P(X >= r·E X) for r > 1 (upper).
inline double chernoff_tail(TailKind kind, double mean, double ratio) {
  if (kind == TailKind::lower && !(ratio > 0.0 && ratio < 1.0))
    throw std::invalid_argument("lower Chernoff tail needs 0 < ratio < 1");
  if (kind == TailKind::upper && !(ratio > 1.0)) throw std::invalid_argument("upper Chernoff tail needs ratio > 1");
  if (!(mean >= 0.0)) throw std::invalid_argument("Chernoff mean must be non-negative");
  return std::exp(-chernoff_rate(ratio) * mean);
}

}  // namespace hamspan
