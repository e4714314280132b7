#include <sstream>

#include "catch_amalgamated.hpp"

#include "support.hpp"

using namespace hamspan;
using namespace testing;

namespace {

ExperimentConfig small_config(std::size_t workers) {
  ExperimentConfig cfg;
  cfg.cells = {{31, 3.0, std::nullopt}, {31, -3.0, std::nullopt}};
  cfg.trials = 6;
  cfg.master_seed = 2024;
  cfg.workers = workers;
  cfg.run_refutation = true;
  return cfg;
}

std::string without_timings(const std::vector<TrialRecord>& rows) {
  auto copy = rows;
  for (auto& r : copy) r.ms_sample = r.ms_span = r.ms_refute = 0;
  std::ostringstream os;
  write_csv(os, copy);
  return os.str();
}

}  // namespace

TEST_CASE("CSV header is the fixed column list") {
  CHECK(std::string(csv_header) ==
        "seed,n,p,m,min_degree,small_count,hamiltonian,verdict,rank,dim,switcher_found,refutation_ok,ms_sample,ms_span,"
        "ms_refute");
}

TEST_CASE("records are consistent with their verdicts") {
  auto rows = run_experiment(small_config(1));
  REQUIRE(rows.size() == 12);
  for (const auto& r : rows) {
    CHECK(r.n == 31);
    CHECK(r.rank <= r.dim);
    if (r.verdict == SpanKind::spanned_confirmed) {
      CHECK(r.rank == r.dim);
      CHECK(r.hamiltonian == Hamiltonicity::yes);
    }
    if (r.min_degree < 2) CHECK(r.hamiltonian == Hamiltonicity::no);
    if (r.refutation_ok && *r.refutation_ok) CHECK(r.switcher_found);
    CHECK(r.refutation_ok.has_value());
  }
  // Trial t of cell c uses the documented sub-seed.
  CHECK(rows[7].seed == trial_seed(2024, 1, 1));
  CHECK(rows[7].p == threshold_p(31, -3.0));
}

TEST_CASE("identical output for any worker count") {
  auto one = run_experiment(small_config(1));
  auto three = run_experiment(small_config(3));
  CHECK(without_timings(one) == without_timings(three));
  auto again = run_experiment(small_config(2));
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i].same_outcome(again[i]));
}

TEST_CASE("CSV round trip") {
  auto rows = run_experiment(small_config(2));
  std::stringstream ss;
  write_csv(ss, rows);
  auto back = read_csv(ss);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].same_outcome(rows[i]));
    CHECK(back[i].p == rows[i].p);
  }

  TrialRecord unset;
  unset.n = 5;
  std::stringstream s2;
  write_csv(s2, {unset});
  auto b2 = read_csv(s2);
  REQUIRE(b2.size() == 1);
  CHECK_FALSE(b2[0].refutation_ok.has_value());
}

TEST_CASE("CSV parser rejects malformed input") {
  std::stringstream bad_header("seed,n\n");
  CHECK_THROWS_AS(read_csv(bad_header), std::runtime_error);
  std::stringstream short_row(std::string(csv_header) + "\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
  std::stringstream bad_value(std::string(csv_header) + "\n1,x,0.1,1,1,0,yes,Inconclusive,0,0,false,,0,0,0\n");
  CHECK_THROWS_AS(read_csv(bad_value), std::runtime_error);
}

TEST_CASE("even n is refused without the override") {
  ExperimentConfig cfg;
  cfg.cells = {{30, 3.0, std::nullopt}};
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
  cfg.allow_even_n = true;
  cfg.run_span = false;
  CHECK(run_experiment(cfg).size() == 1);
}

TEST_CASE("minimum degree is more often 3 above the threshold") {
  ExperimentConfig cfg;
  cfg.cells = {{101, 3.0, std::nullopt}, {101, -3.0, std::nullopt}};
  cfg.trials = 100;
  cfg.run_span = false;
  auto rows = run_experiment(cfg);
  std::size_t hi = 0, lo = 0;
  for (std::size_t i = 0; i < 100; ++i) hi += rows[i].min_degree >= 3;
  for (std::size_t i = 100; i < 200; ++i) lo += rows[i].min_degree >= 3;
  CHECK(hi > lo);
}
