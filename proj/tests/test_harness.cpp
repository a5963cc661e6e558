#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "hermite/harness.hpp"
#include "hermite/rng.hpp"
#include "hermite/specfun.hpp"
#include "hermite/stats.hpp"

using namespace hermite;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.q_list = {1};
  cfg.H_list = {0.7};
  cfg.J = 12;
  cfg.N = 11;
  cfg.reps = 8;
  cfg.base_seed = 321;
  cfg.threads = 2;
  return cfg;
}

}  // namespace

TEST_CASE("config validation") {
  ExperimentConfig cfg = small_config();
  CHECK_NOTHROW(cfg.validate());
  cfg.reps = 0;
  CHECK_THROWS(cfg.validate());
  cfg = small_config();
  cfg.q_list = {4};
  CHECK_THROWS(cfg.validate());
  cfg = small_config();
  cfg.H_list = {0.4};
  CHECK_THROWS(cfg.validate());
}

TEST_CASE("parallel_reps: deterministic in rep index, thread count irrelevant") {
  auto fn = [](int r) { return std::sin(static_cast<double>(r) * 1.7); };
  const auto a = parallel_reps(64, 1, fn);
  const auto b = parallel_reps(64, 8, fn);
  CHECK(a == b);
}

TEST_CASE("run_table: determinism, per-rep seeds, m/s recomputable") {
  const ExperimentConfig cfg = small_config();
  const McReport r1 = run_table(cfg);
  const McReport r2 = run_table(cfg);
  REQUIRE(r1.cells.size() == 1);
  CHECK(r1.cells[0].values == r2.cells[0].values);

  const McCell& c = r1.cell(1, 0.7);
  REQUIRE(c.values.size() == 8);
  for (std::size_t i = 0; i < c.seeds.size(); ++i)
    CHECK(c.seeds[i] == replication_seed(cfg.base_seed, static_cast<std::uint64_t>(i)));
  CHECK(c.m == doctest::Approx(mean(c.values)).epsilon(1e-12));
  CHECK(c.s == doctest::Approx(sample_sd(c.values)).epsilon(1e-12));

  // thread count must not change the report content
  ExperimentConfig cfg4 = cfg;
  cfg4.threads = 4;
  const McReport r3 = run_table(cfg4);
  CHECK(r1.cells[0].values == r3.cells[0].values);
}

TEST_CASE("normality diagnostics: quantile-matched, shifted, and null samples") {
  const std::size_t n = 100;
  const double sd = 2.5;
  std::vector<double> exact(n);
  for (std::size_t i = 0; i < n; ++i)
    exact[i] = sd * normal_quantile((static_cast<double>(i) + 0.5) / n);
  const auto d = normality_diagnostics(exact, sd);
  CHECK(d.wasserstein1 < 0.02 * sd);
  CHECK(d.ks_stat < 0.011);

  std::vector<double> shifted(exact);
  for (auto& v : shifted) v += 10.0 * sd;
  CHECK(normality_diagnostics(shifted, sd).ks_stat > 0.95);

  // i.i.d. null sample at fixed seed: KS below twice the 5% critical value
  Rng rng(mix_seed(2024));
  std::normal_distribution<double> gauss(0.0, sd);
  std::vector<double> iid(500);
  for (auto& v : iid) v = gauss(rng);
  CHECK(normality_diagnostics(iid, sd).ks_stat < 2.0 * 1.36 / std::sqrt(500.0));
}

TEST_CASE("normality diagnostics: guards") {
  std::vector<double> tiny(10, 0.5);
  CHECK_THROWS(normality_diagnostics(tiny, 1.0));
  std::vector<double> flat(64, 1.0);
  CHECK_THROWS(normality_diagnostics(flat, 1.0));
}

TEST_CASE("serialization: csv layout and json meta isolation") {
  ExperimentConfig cfg = small_config();
  cfg.reps = 4;
  const McReport rep = run_table(cfg);

  const std::string csv = to_csv(rep);
  CHECK(csv.find("q,stat,H=0.7") == 0);
  CHECK(csv.find("1,m,") != std::string::npos);
  CHECK(csv.find("1,s,") != std::string::npos);

  const std::string with_meta = to_json(rep, true);
  const std::string bare_a = to_json(rep, false);
  const std::string bare_b = to_json(run_table(cfg), false);
  CHECK(with_meta.find("\"meta\"") != std::string::npos);
  CHECK(with_meta.find("timestamp") != std::string::npos);
  CHECK(bare_a.find("\"meta\"") == std::string::npos);
  // stripped payloads are byte-identical across reruns
  CHECK(bare_a == bare_b);
}

TEST_CASE("clt_sweep: single-N run emits sane diagnostics") {
  ExperimentConfig cfg = small_config();
  cfg.reps = 60;
  const auto entries = clt_sweep(cfg, {9}, 5, false);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].N == 9);
  CHECK(entries[0].diag.n == 60);
  CHECK(entries[0].sample_var > 0.3);
  CHECK(entries[0].sample_var < 3.0);
  CHECK(entries[0].diag.ks_stat < 0.35);
}

TEST_CASE("replication seeding: distinct and stable") {
  CHECK(replication_seed(1, 0) != replication_seed(1, 1));
  CHECK(replication_seed(1, 0) != replication_seed(2, 0));
  CHECK(replication_seed(42, 7) == replication_seed(42, 7));
}
