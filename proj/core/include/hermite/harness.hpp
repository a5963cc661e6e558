#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hermite/simulator.hpp"
#include "hermite/variations.hpp"
#include "hermite/volatility.hpp"

namespace hermite {

struct ExperimentConfig {
  std::vector<int> q_list = {1, 2, 3};
  std::vector<double> H_list = {0.6, 0.7, 0.8, 0.9};
  int J = 18;
  double a = 0.99;
  double eps = 1e-3;
  int N = 17;
  double gamma = 0.95;
  int p = 2;
  std::string h_name = "identity";
  int reps = 100;
  std::uint64_t base_seed = 20240817;
  int threads = 0;  // 0 = hardware concurrency
  // per-q normalization; defaults follow the table-reproduction convention
  Normalization norm_q1 = Normalization::standardized;
  Normalization norm_qhigh = Normalization::calibrated;

  Normalization norm_for(int q) const { return q == 1 ? norm_q1 : norm_qhigh; }
  void validate() const;
};

struct McCell {
  int q = 0;
  double H = 0.0;
  double m = 0.0;  // mean of per-rep estimates
  double s = 0.0;  // sample sd (divisor n-1)
  std::vector<double> values;
  std::vector<std::uint64_t> seeds;
  double wall_seconds = 0.0;
};

struct McReport {
  ExperimentConfig config;
  std::vector<McCell> cells;
  std::string status = "ok";

  const McCell& cell(int q, double H) const;
};

// One full replication: FARIMA -> Hermite path -> X_J -> S_{N,p}(X).
double run_replication(const ExperimentConfig& cfg, int q, double H, std::uint64_t seed,
                       const WeightTable& weights);

McReport run_table(const ExperimentConfig& cfg);

struct NormalityDiagnostics {
  double ks_stat = 0.0;
  double wasserstein1 = 0.0;
  std::size_t n = 0;
};

// Compares the sample against N(0, target_sd^2).
NormalityDiagnostics normality_diagnostics(const std::vector<double>& sample, double target_sd);

struct CltSweepEntry {
  int N = 0;
  NormalityDiagnostics diag;
  double sample_var = 0.0;
};

// Runs V_{N,p}/sqrt(m_p) (or U with a weight) at each N using paths at
// resolution J = N + j_margin, diagnostics against the standard normal.
std::vector<CltSweepEntry> clt_sweep(const ExperimentConfig& cfg, const std::vector<int>& N_list,
                                     int j_margin = 7, bool weighted = false);

// Parallel map over replication indices (deterministic: each rep derives its
// seed from base_seed and its index, not from scheduling).
std::vector<double> parallel_reps(int reps, int threads,
                                  const std::function<double(int)>& fn);

// Report serialization. The JSON payload isolates volatile fields (timestamp,
// wall-clock) under "meta" so byte-comparisons can strip them.
std::string to_json(const McReport& report, bool with_meta = true);
std::string to_csv(const McReport& report);  // table layout: rows q, cols H, sub-rows m/s
void write_report(const McReport& report, const std::string& path, const std::string& format);

}  // namespace hermite
