#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/graph_io.hpp"
#include "hamspan/properties.hpp"
#include "hamspan/refutation.hpp"
#include "hamspan/spanning.hpp"
#include "hamspan/switcher.hpp"

// Certificates are JSON objects. Graphs travel as graph6, edge subsets as
// the hex form of their edge vector (edge ids follow the graph's sorted
// edge list), cycles and paths as vertex sequences. Every certificate can
// be re-checked from its own contents with the matching check_* function.
//
// Keys:
//   verdict:    graph6, kind, rank, dim, work, note, certificate (list of
//               Hamilton cycles), witness (optional witness record)
//   witness:    graph6, r_hex, r_edges, even_with_all_hamilton,
//               odd_with_some_cycle, normalized, flips, bipartition_form,
//               odd_cycle_hex
//   switcher:   graph6, r_hex, cycle, paths, path_even, path_odd,
//               r_parity_even, r_parity_odd, non_r_edge
//   refutation: graph6, r_hex, switcher, hamilton_cycle, r_parity, attempts

namespace hamspan {

using json = nlohmann::json;

namespace detail {

inline json edge_list_json(const Graph& g, const EdgeVector& v) {
  json out = json::array();
  v.for_each([&](std::size_t id) {
    const Edge& e = g.edge(static_cast<EdgeId>(id));
    out.push_back({e.u, e.v});
  });
  return out;
}

inline Path path_from(const json& j) {
  Path p;
  for (const auto& v : j) p.push_back(v.get<Vertex>());
  return p;
}

}  // namespace detail

inline json witness_json(const Graph& g, const WitnessR& w) {
  json j;
  j["graph6"] = to_graph6(g);
  j["r_hex"] = to_hex(w.vector);
  j["r_edges"] = detail::edge_list_json(g, w.vector);
  j["even_with_all_hamilton"] = w.even_with_all_hamilton;
  j["odd_with_some_cycle"] = w.odd_with_some_cycle;
  j["normalized"] = w.normalized;
  j["flips"] = w.flips;
  j["bipartition_form"] = is_bipartition_form(g, w.vector);
  if (auto c = odd_cycle_for(g, w.vector)) j["odd_cycle_hex"] = to_hex(*c);
  return j;
}

inline json verdict_json(const Graph& g, const SpanVerdict& v) {
  json j;
  j["graph6"] = to_graph6(g);
  j["kind"] = to_string(v.kind);
  j["rank"] = v.rank_reached;
  j["dim"] = v.dim_cycle_space;
  j["work"] = v.work;
  j["note"] = v.note;
  json cycles = json::array();
  for (const auto& h : v.certificate) cycles.push_back(h.order);
  j["certificate"] = std::move(cycles);
  if (v.witness) j["witness"] = witness_json(g, *v.witness);
  return j;
}

inline json switcher_json(const Graph& g, const ParitySwitcher& w, const EdgeVector& r) {
  auto [even_path, odd_path] = hamilton_paths_of_switcher(g, w, r);
  json j;
  j["graph6"] = to_graph6(g);
  j["r_hex"] = to_hex(r);
  j["cycle"] = w.cycle;
  j["paths"] = w.paths;
  j["path_even"] = even_path;
  j["path_odd"] = odd_path;
  j["r_parity_even"] = intersection_parity(edge_vector_of_walk(g, even_path, false), r) ? 1 : 0;
  j["r_parity_odd"] = intersection_parity(edge_vector_of_walk(g, odd_path, false), r) ? 1 : 0;
  EdgeVector non_r = edge_vector_of_walk(g, w.cycle, true) - r;
  if (non_r.count() == 1) j["non_r_edge"] = detail::edge_list_json(g, non_r)[0];
  return j;
}

inline json refutation_json(const Graph& g, const EdgeVector& r, const RefutationOutcome& out) {
  json j;
  j["graph6"] = to_graph6(g);
  j["r_hex"] = to_hex(r);
  j["switcher"] = switcher_json(g, out.switcher, r);
  j["hamilton_cycle"] = out.cycle.order;
  j["r_parity"] = intersection_parity(out.cycle.vector, r) ? 1 : 0;
  j["attempts"] = out.attempts;
  return j;
}

inline json property_json(const Graph& g, const PropertyReport& rep, const std::optional<EdgeVector>& r = std::nullopt) {
  json j;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["delta"] = rep.delta;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["name"] = c.name;
    e["holds"] = c.holds;
    e["exact"] = c.exact;
    e["vacuous"] = c.vacuous;
    e["detail"] = c.detail;
    if (!c.holds) {
      json sets = json::array();
      for (const auto& s : c.sets) {
        std::vector<Vertex> vs;
        s.for_each([&](std::size_t v) { vs.push_back(static_cast<Vertex>(v)); });
        sets.push_back(vs);
      }
      e["sets"] = std::move(sets);
      if (c.path) e["path"] = *c.path;
      if (c.vertex) e["vertex"] = *c.vertex;
      e["reverified"] = reverify_violation(g, rep, c, r);
    }
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

/// Re-checks a witness record: R pairs oddly with the recorded cycle, that
/// cycle is an even subgraph, the form flag matches, and (when normalized)
/// deg_R(v) >= deg_G(v)/2 everywhere. Evenness against all Hamilton cycles
/// is not re-checkable from the record and is not claimed here.
inline bool check_witness_certificate(const json& j) {
  const Graph g = from_graph6(j.at("graph6").get<std::string>());
  const EdgeVector r = from_hex(j.at("r_hex").get<std::string>(), g.size());
  if (j.at("bipartition_form").get<bool>() != is_bipartition_form(g, r)) return false;
  if (j.contains("odd_cycle_hex")) {
    const EdgeVector c = from_hex(j.at("odd_cycle_hex").get<std::string>(), g.size());
    if (c.empty() || !is_even_subgraph(g, c) || !intersection_parity(c, r)) return false;
  }
  if (j.at("normalized").get<bool>()) {
    auto deg_r = subgraph_degrees(g, r);
    for (Vertex v = 0; v < g.order(); ++v)
      if (2 * deg_r[v] < g.degree(v)) return false;
  }
  return true;
}

/// Re-checks a verdict record: every listed cycle is a Hamilton cycle, the
/// recorded rank is their GF(2) rank, and the kind agrees with rank vs dim.
inline bool check_verdict_certificate(const json& j) {
  const Graph g = from_graph6(j.at("graph6").get<std::string>());
  std::vector<EdgeVector> rows;
  for (const auto& c : j.at("certificate")) {
    try {
      rows.push_back(make_hamilton_cycle(g, detail::path_from(c)).vector);
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  const std::size_t rank = gf2_rank(rows), dim = cycle_space_dimension(g);
  if (j.at("dim").get<std::size_t>() != dim) return false;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == to_string(SpanKind::spanned_exact) || kind == to_string(SpanKind::spanned_confirmed))
    return rank == dim && j.at("rank").get<std::size_t>() == rank;
  if (kind == to_string(SpanKind::not_spanned)) {
    if (!j.contains("witness") || !check_witness_certificate(j.at("witness"))) return false;
    const EdgeVector r = from_hex(j.at("witness").at("r_hex").get<std::string>(), g.size());
    for (const auto& row : rows)
      if (intersection_parity(row, r)) return false;
    return true;
  }
  return true;
}

/// Re-checks a switcher record: the structure validates, both listed paths
/// are Hamilton paths of the switcher with the recorded parities.
inline bool check_switcher_certificate(const json& j) {
  const Graph g = from_graph6(j.at("graph6").get<std::string>());
  const EdgeVector r = from_hex(j.at("r_hex").get<std::string>(), g.size());
  ParitySwitcher w;
  w.cycle = detail::path_from(j.at("cycle"));
  for (const auto& p : j.at("paths")) w.paths.push_back(detail::path_from(p));
  try {
    validate_switcher(g, w, r);
  } catch (const std::invalid_argument&) {
    return false;
  }
  const VertexSet cover = switcher_vertices(g, w);
  const Vertex x = w.cycle.front(), y = w.cycle[w.k()];
  const Path a = detail::path_from(j.at("path_even")), b = detail::path_from(j.at("path_odd"));
  if (!is_hamilton_path_of(g, a, cover, x, y) || !is_hamilton_path_of(g, b, cover, x, y)) return false;
  return !intersection_parity(edge_vector_of_walk(g, a, false), r) && intersection_parity(edge_vector_of_walk(g, b, false), r) &&
         j.at("r_parity_even").get<int>() == 0 && j.at("r_parity_odd").get<int>() == 1;
}

/// Re-checks a refutation record: the cycle is Hamiltonian and meets R oddly.
inline bool check_refutation_certificate(const json& j) {
  const Graph g = from_graph6(j.at("graph6").get<std::string>());
  const EdgeVector r = from_hex(j.at("r_hex").get<std::string>(), g.size());
  try {
    HamiltonCycle h = make_hamilton_cycle(g, detail::path_from(j.at("hamilton_cycle")));
    return intersection_parity(h.vector, r) && check_switcher_certificate(j.at("switcher"));
  } catch (const std::invalid_argument&) {
    return false;
  }
}

}  // namespace hamspan
