#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hamspan/hamspan.hpp"

using namespace hamspan;

namespace {

struct GraphSource {
  std::string g6;
  std::string in;
  std::size_t n = 0;
  double f = 3.0;
  std::optional<double> p;
  std::uint64_t seed = 0;
  bool allow_even_n = false;

  void add_to(CLI::App* app) {
    app->add_option("--g6", g6, "graph in graph6");
    app->add_option("--in", in, "file holding graph6 or an 'n m' edge list");
    app->add_option("--n", n, "vertex count of a sampled graph");
    app->add_option("--f", f, "threshold offset");
    app->add_option("--p", p, "edge probability (overrides --f)");
    app->add_option("--seed", seed, "64-bit seed");
    app->add_flag("--allow-even-n", allow_even_n, "accept even n");
  }

  Graph load() const {
    if (!g6.empty()) return from_graph6(g6);
    if (!in.empty()) {
      std::ifstream is(in);
      if (!is) throw std::runtime_error("cannot open " + in);
      std::string text((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
      std::istringstream probe(text);
      std::size_t a = 0, b = 0;
      if (probe >> a >> b) return parse_edge_list(text);
      std::string line;
      std::istringstream lines(text);
      std::getline(lines, line);
      return from_graph6(line);
    }
    if (n == 0) throw std::runtime_error("no graph: give --g6, --in or --n");
    return sample_gnp(ModelParams{n, f, p, seed, allow_even_n});
  }
};

struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text << '\n';
      return;
    }
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    os << text << '\n';
  }
};

/// R from --r-hex, or a synthetic normalized witness drawn with --r-seed.
EdgeVector load_r(const Graph& g, const std::string& hex, std::uint64_t r_seed) {
  if (!hex.empty()) return from_hex(hex, g.size());
  auto w = synthetic_witness(g, r_seed);
  if (!w) throw std::runtime_error("could not draw a synthetic witness");
  return w->vector;
}

int exit_code_of(SpanKind k) {
  switch (k) {
    case SpanKind::spanned_exact:
    case SpanKind::spanned_confirmed:
    case SpanKind::trivially_spanned: return 0;
    case SpanKind::not_spanned: return 1;
    case SpanKind::inconclusive: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycle space tools"};
  app.require_subcommand(1);

  GraphSource gen_src;
  Output gen_out;
  auto* gen = app.add_subcommand("gen", "sample G(n, p) and print graph6");
  gen_src.add_to(gen);
  gen->add_option("--out", gen_out.path);

  GraphSource span_src;
  Output span_out;
  std::string mode = "sampled";
  std::optional<std::uint64_t> span_budget;
  auto* span = app.add_subcommand("span", "decide whether Hamilton cycles span the cycle space (exit 0/1/2)");
  span_src.add_to(span);
  span->add_option("--mode", mode)->check(CLI::IsMember({"exact", "sampled"}));
  span->add_option("--budget", span_budget, "exact: search nodes; sampled: Hamilton cycles (default dim + 50)");
  span->add_option("--out", span_out.path);

  GraphSource wit_src;
  Output wit_out;
  std::string norm = "exact";
  std::optional<std::uint64_t> wit_budget;
  auto* wit = app.add_subcommand("witness", "extract and normalize a witness R (exit 1 if none exists)");
  wit_src.add_to(wit);
  wit->add_option("--normalize", norm)->check(CLI::IsMember({"exact", "hillclimb"}));
  wit->add_option("--budget", wit_budget, "search nodes");
  wit->add_option("--out", wit_out.path);

  GraphSource sw_src, ref_src;
  Output sw_out, ref_out;
  std::string sw_r, ref_r;
  std::uint64_t sw_r_seed = 1, ref_r_seed = 1;
  std::size_t sw_attempts = 24, ref_attempts = 24;
  auto* sw = app.add_subcommand("switcher", "build a parity switcher for R and print its certificate");
  sw_src.add_to(sw);
  sw->add_option("--r-hex", sw_r, "R as an edge-vector hex string (default: synthetic)");
  sw->add_option("--r-seed", sw_r_seed, "seed of the synthetic R");
  sw->add_option("--attempts", sw_attempts);
  sw->add_option("--out", sw_out.path);
  auto* ref = app.add_subcommand("refute", "build a Hamilton cycle meeting R oddly");
  ref_src.add_to(ref);
  ref->add_option("--r-hex", ref_r, "R as an edge-vector hex string (default: synthetic)");
  ref->add_option("--r-seed", ref_r_seed, "seed of the synthetic R");
  ref->add_option("--attempts", ref_attempts);
  ref->add_option("--out", ref_out.path);

  GraphSource prop_src;
  Output prop_out;
  PropertyOptions popt;
  std::string prop_r;
  auto* props = app.add_subcommand("props", "property report");
  prop_src.add_to(props);
  props->add_option("--delta", popt.delta);
  props->add_option("--samples", popt.samples);
  props->add_option("--exact-limit", popt.exact_limit);
  props->add_option("--r-hex", prop_r, "R for the robust-edge check");
  props->add_option("--out", prop_out.path);

  std::vector<std::size_t> exp_n{101};
  std::vector<double> exp_f{3.0};
  std::optional<double> exp_p;
  ExperimentConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  std::optional<std::size_t> exp_budget;
  std::string exp_out;
  bool no_span = false;
  auto* exp = app.add_subcommand("experiment", "Monte Carlo campaign over (n, f) cells, CSV out");
  exp->add_option("--n", exp_n, "vertex counts");
  exp->add_option("--f", exp_f, "threshold offsets");
  exp->add_option("--p", exp_p, "edge probability (overrides --f)");
  exp->add_option("--trials", cfg.trials);
  exp->add_option("--seed", cfg.master_seed);
  exp->add_option("--workers", cfg.workers);
  exp->add_option("--budget", exp_budget, "sampled Hamilton cycles per trial (default dim + 50)");
  exp->add_flag("--allow-even-n", cfg.allow_even_n);
  exp->add_flag("--refute", cfg.run_refutation, "also run the pipeline on a synthetic R");
  exp->add_flag("--no-span", no_span, "skip the spanning check");
  exp->add_option("--out", exp_out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      gen_out.write(to_graph6(gen_src.load()));
      return 0;
    }
    if (*span) {
      const Graph g = span_src.load();
      SpanVerdict v = mode == "exact" ? decide_spanning_exact(g, span_budget.value_or(100'000'000))
                                      : confirm_spanning_sampled(g, SampleOptions{span_budget ? *span_budget : cycle_space_dimension(g) + 50,
                                                                                  span_src.seed, 1'000'000});
      span_out.write(verdict_json(g, v).dump(2));
      return exit_code_of(v.kind);
    }
    if (*wit) {
      const Graph g = wit_src.load();
      SpanVerdict v = decide_spanning_exact(g, wit_budget.value_or(100'000'000));
      if (v.kind == SpanKind::inconclusive) {
        std::cerr << "inconclusive: " << v.note << '\n';
        return 2;
      }
      if (!v.witness) {
        std::cerr << "Hamilton cycles span the cycle space; no witness\n";
        return 1;
      }
      WitnessR w = normalize_witness(g, *v.witness, norm == "exact" ? NormalizeMode::exact : NormalizeMode::hillclimb);
      wit_out.write(witness_json(g, w).dump(2));
      return 0;
    }
    if (*sw) {
      const Graph g = sw_src.load();
      const EdgeVector r = load_r(g, sw_r, sw_r_seed);
      RefutationOptions o;
      o.seed = sw_src.seed;
      o.attempts = sw_attempts;
      auto res = build_parity_switcher(g, r, o);
      if (!res) {
        std::cerr << res.failure().stage << ": " << res.failure().detail << '\n';
        return 1;
      }
      sw_out.write(switcher_json(g, res->build.switcher, r).dump(2));
      return 0;
    }
    if (*ref) {
      const Graph g = ref_src.load();
      const EdgeVector r = load_r(g, ref_r, ref_r_seed);
      RefutationOptions o;
      o.seed = ref_src.seed;
      o.attempts = ref_attempts;
      auto res = refutation_pipeline(g, r, o);
      if (!res) {
        std::cerr << res.failure().stage << ": " << res.failure().detail << '\n';
        return 1;
      }
      ref_out.write(refutation_json(g, r, *res).dump(2));
      return 0;
    }
    if (*props) {
      const Graph g = prop_src.load();
      popt.seed = prop_src.seed;
      std::optional<EdgeVector> r;
      if (!prop_r.empty()) r = from_hex(prop_r, g.size());
      auto rep = property_report(g, r, popt);
      prop_out.write(property_json(g, rep, r).dump(2));
      return rep.all_hold() ? 0 : 1;
    }
    if (*exp) {
      for (std::size_t n : exp_n) {
        if (exp_p) cfg.cells.push_back({n, 0.0, exp_p});
        else
          for (double f : exp_f) cfg.cells.push_back({n, f, std::nullopt});
      }
      cfg.span_budget = exp_budget;
      cfg.run_span = !no_span;
      auto rows = run_experiment(cfg);
      if (exp_out.empty()) write_csv(std::cout, rows);
      else write_csv_file(exp_out, rows);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
