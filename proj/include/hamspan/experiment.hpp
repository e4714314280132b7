#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "hamspan/gf2.hpp"
#include "hamspan/graph.hpp"
#include "hamspan/model.hpp"
#include "hamspan/refutation.hpp"
#include "hamspan/rng.hpp"
#include "hamspan/spanning.hpp"

namespace hamspan {

enum class Hamiltonicity { yes, no, unknown };

inline const char* to_string(Hamiltonicity h) {
  switch (h) {
    case Hamiltonicity::yes: return "yes";
    case Hamiltonicity::no: return "no";
    case Hamiltonicity::unknown: return "unknown";
  }
  return "?";
}

struct TrialRecord {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double p = 0;
  std::size_t m = 0;
  std::size_t min_degree = 0;
  std::size_t small_count = 0;
  Hamiltonicity hamiltonian = Hamiltonicity::unknown;
  SpanKind verdict = SpanKind::inconclusive;
  std::size_t rank = 0;
  std::size_t dim = 0;
  bool switcher_found = false;
  std::optional<bool> refutation_ok;
  double ms_sample = 0;
  double ms_span = 0;
  double ms_refute = 0;

  /// Equality on every field except the timings.
  bool same_outcome(const TrialRecord& o) const {
    return seed == o.seed && n == o.n && p == o.p && m == o.m && min_degree == o.min_degree &&
           small_count == o.small_count && hamiltonian == o.hamiltonian && verdict == o.verdict && rank == o.rank &&
           dim == o.dim && switcher_found == o.switcher_found && refutation_ok == o.refutation_ok;
  }
};

struct ExperimentCell {
  std::size_t n = 101;
  double f = 3.0;
  std::optional<double> p;  // overrides f
};

struct ExperimentConfig {
  std::vector<ExperimentCell> cells;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  bool allow_even_n = false;
  bool run_span = true;
  /// Sampled Hamilton cycles per trial; dim + span_extra when unset.
  std::optional<std::size_t> span_budget;
  std::size_t span_extra = 50;
  std::uint64_t path_budget = 1'000'000;
  bool run_refutation = false;
  RefutationOptions refutation;
};

/// Sub-seed of trial t in cell c.
inline std::uint64_t trial_seed(std::uint64_t master, std::size_t cell, std::size_t trial) {
  return derive_seed(master, cell, trial);
}

inline TrialRecord run_trial(const ExperimentConfig& cfg, const ExperimentCell& cell, std::uint64_t seed) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t) { return std::chrono::duration<double, std::milli>(clock::now() - t).count(); };
  ModelParams mp{cell.n, cell.f, cell.p, seed, cfg.allow_even_n};
  TrialRecord rec;
  rec.seed = seed;
  rec.n = cell.n;
  rec.p = mp.p();

  auto t0 = clock::now();
  const Graph g = sample_gnp(mp);
  rec.ms_sample = ms_since(t0);
  rec.m = g.size();
  rec.min_degree = min_degree(g);
  rec.small_count = small_vertices(g).count();
  rec.dim = cycle_space_dimension(g);
  if (!is_connected(g) || rec.min_degree < 2) rec.hamiltonian = Hamiltonicity::no;

  if (cfg.run_span) {
    t0 = clock::now();
    SampleOptions so{cfg.span_budget.value_or(rec.dim + cfg.span_extra), derive_seed(seed, 2), cfg.path_budget};
    auto v = confirm_spanning_sampled(g, so);
    rec.ms_span = ms_since(t0);
    rec.verdict = v.kind;
    rec.rank = v.rank_reached;
    if (!v.certificate.empty()) rec.hamiltonian = Hamiltonicity::yes;
  }
  if (cfg.run_refutation) {
    t0 = clock::now();
    if (auto w = synthetic_witness(g, derive_seed(seed, 1))) {
      RefutationOptions ro = cfg.refutation;
      ro.seed = derive_seed(seed, 3);
      auto res = refutation_pipeline(g, w->vector, ro);
      rec.switcher_found = res.ok() || res.failure().stage != "S2a";
      rec.refutation_ok = res.ok();
      if (res.ok()) rec.hamiltonian = Hamiltonicity::yes;
    } else {
      rec.refutation_ok = false;
    }
    rec.ms_refute = ms_since(t0);
  }
  return rec;
}

/// Runs every (cell, trial) pair on cfg.workers threads. Records come back
/// in (cell, trial) order whatever the worker count.
inline std::vector<TrialRecord> run_experiment(const ExperimentConfig& cfg) {
  for (const auto& c : cfg.cells) ModelParams{c.n, c.f, c.p, 0, cfg.allow_even_n}.validate();
  const std::size_t total = cfg.cells.size() * cfg.trials;
  std::vector<TrialRecord> out(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < total;) {
      const std::size_t c = i / cfg.trials, t = i % cfg.trials;
      out[i] = run_trial(cfg, cfg.cells[c], trial_seed(cfg.master_seed, c, t));
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.workers, total));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* csv_header =
    "seed,n,p,m,min_degree,small_count,hamiltonian,verdict,rank,dim,switcher_found,refutation_ok,ms_sample,ms_span,ms_refute";

inline void write_csv(std::ostream& os, const std::vector<TrialRecord>& rows) {
  os << csv_header << '\n';
  char p[32], t[3][32];
  for (const auto& r : rows) {
    std::snprintf(p, sizeof p, "%.17g", r.p);
    std::snprintf(t[0], sizeof t[0], "%.3f", r.ms_sample);
    std::snprintf(t[1], sizeof t[1], "%.3f", r.ms_span);
    std::snprintf(t[2], sizeof t[2], "%.3f", r.ms_refute);
    os << r.seed << ',' << r.n << ',' << p << ',' << r.m << ',' << r.min_degree << ',' << r.small_count << ','
       << to_string(r.hamiltonian) << ',' << to_string(r.verdict) << ',' << r.rank << ',' << r.dim << ','
       << (r.switcher_found ? "true" : "false") << ',' << (r.refutation_ok ? (*r.refutation_ok ? "true" : "false") : "")
       << ',' << t[0] << ',' << t[1] << ',' << t[2] << '\n';
  }
}

namespace detail {

template <class T>
T parse_number(const std::string& s, const char* field) {
  T v{};
  if constexpr (std::is_floating_point_v<T>) {
    std::size_t used = 0;
    try {
      v = static_cast<T>(std::stod(s, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw std::runtime_error(std::string("csv: bad ") + field + " '" + s + "'");
  } else {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::runtime_error(std::string("csv: bad ") + field + " '" + s + "'");
  }
  return v;
}

inline bool parse_bool(const std::string& s, const char* field) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::runtime_error(std::string("csv: bad ") + field + " '" + s + "'");
}

}  // namespace detail

inline std::vector<TrialRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != csv_header) throw std::runtime_error("csv: missing or unexpected header");
  std::vector<TrialRecord> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 15) throw std::runtime_error("csv: expected 15 fields, got " + std::to_string(f.size()));
    TrialRecord r;
    r.seed = detail::parse_number<std::uint64_t>(f[0], "seed");
    r.n = detail::parse_number<std::size_t>(f[1], "n");
    r.p = detail::parse_number<double>(f[2], "p");
    r.m = detail::parse_number<std::size_t>(f[3], "m");
    r.min_degree = detail::parse_number<std::size_t>(f[4], "min_degree");
    r.small_count = detail::parse_number<std::size_t>(f[5], "small_count");
    if (f[6] == "yes") r.hamiltonian = Hamiltonicity::yes;
    else if (f[6] == "no") r.hamiltonian = Hamiltonicity::no;
    else if (f[6] == "unknown") r.hamiltonian = Hamiltonicity::unknown;
    else throw std::runtime_error("csv: bad hamiltonian '" + f[6] + "'");
    bool known = false;
    for (auto k : {SpanKind::spanned_exact, SpanKind::spanned_confirmed, SpanKind::not_spanned, SpanKind::trivially_spanned,
                   SpanKind::inconclusive})
      if (f[7] == to_string(k)) {
        r.verdict = k;
        known = true;
      }
    if (!known) throw std::runtime_error("csv: bad verdict '" + f[7] + "'");
    r.rank = detail::parse_number<std::size_t>(f[8], "rank");
    r.dim = detail::parse_number<std::size_t>(f[9], "dim");
    r.switcher_found = detail::parse_bool(f[10], "switcher_found");
    if (!f[11].empty()) r.refutation_ok = detail::parse_bool(f[11], "refutation_ok");
    r.ms_sample = detail::parse_number<double>(f[12], "ms_sample");
    r.ms_span = detail::parse_number<double>(f[13], "ms_span");
    r.ms_refute = detail::parse_number<double>(f[14], "ms_refute");
    rows.push_back(r);
  }
  return rows;
}

inline void write_csv_file(const std::string& path, const std::vector<TrialRecord>& rows) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_csv(os, rows);
  if (!os) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace hamspan
