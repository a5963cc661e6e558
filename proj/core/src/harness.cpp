#include "hermite/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hermite/rng.hpp"
#include "hermite/stats.hpp"

namespace hermite {

void ExperimentConfig::validate() const {
  if (reps < 1) throw std::invalid_argument("ExperimentConfig: reps must be >= 1");
  if (q_list.empty() || H_list.empty())
    throw std::invalid_argument("ExperimentConfig: empty q/H list");
  for (int q : q_list)
    if (q < 1 || q > 3) throw std::invalid_argument("ExperimentConfig: q out of range");
  for (double H : H_list)
    if (!(H > 0.5 && H < 1.0)) throw std::invalid_argument("ExperimentConfig: H out of range");
}

const McCell& McReport::cell(int q, double H) const {
  for (const auto& c : cells)
    if (c.q == q && std::fabs(c.H - H) < 1e-12) return c;
  throw std::out_of_range("McReport: no such cell");
}

std::vector<double> parallel_reps(int reps, int threads,
                                  const std::function<double(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min(threads, reps);
  std::vector<double> out(static_cast<std::size_t>(reps));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mx;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      while (true) {
        const int r = next.fetch_add(1);
        if (r >= reps) break;
        try {
          out[static_cast<std::size_t>(r)] = fn(r);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mx);
          if (!err) err = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
  return out;
}

double run_replication(const ExperimentConfig& cfg, int q, double H, std::uint64_t seed,
                       const WeightTable& weights) {
  HermiteParams params{q, H};
  SimGrid grid;
  grid.J = cfg.J;
  grid.a = cfg.a;
  grid.eps = cfg.eps;
  grid.horizon = 1.0 + std::pow(2.0, -cfg.N);
  HermitePath z = build_path(params, grid, weights, seed, cfg.norm_for(q));
  const WeightFn h = WeightFn::parse(cfg.h_name);
  VolatilityPath x = build_X_path(z, h);
  VariationConfig vc;
  vc.N = cfg.N;
  vc.gamma = cfg.gamma;
  vc.p = cfg.p;
  return estimate_integrated_volatility(x, vc, H);
}

McReport run_table(const ExperimentConfig& cfg) {
  cfg.validate();
  McReport report;
  report.config = cfg;
  SimGrid grid;
  grid.J = cfg.J;
  grid.eps = cfg.eps;
  const int max_diff = grid.max_diff();
  for (int q : cfg.q_list) {
    for (double H : cfg.H_list) {
      const auto t0 = std::chrono::steady_clock::now();
      HermiteParams params{q, H};
      MeyerProfile profile = build_profile(params.delta());
      WeightTable weights = build_weight_table(profile, q, max_diff);
      McCell cell;
      cell.q = q;
      cell.H = H;
      cell.seeds.resize(static_cast<std::size_t>(cfg.reps));
      for (int r = 0; r < cfg.reps; ++r)
        cell.seeds[static_cast<std::size_t>(r)] =
            replication_seed(cfg.base_seed, static_cast<std::uint64_t>(r));
      cell.values = parallel_reps(cfg.reps, cfg.threads, [&](int r) {
        return run_replication(cfg, q, H, cell.seeds[static_cast<std::size_t>(r)], weights);
      });
      cell.m = mean(cell.values);
      cell.s = cfg.reps > 1 ? sample_sd(cell.values) : 0.0;
      cell.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

NormalityDiagnostics normality_diagnostics(const std::vector<double>& sample, double target_sd) {
  if (sample.size() < 30) throw std::invalid_argument("normality_diagnostics: need n >= 30");
  if (!(sample_sd(sample) > 0.0))
    throw std::invalid_argument("normality_diagnostics: degenerate sample");
  NormalityDiagnostics d;
  d.ks_stat = ks_against_normal(sample, target_sd);
  d.wasserstein1 = wasserstein1_against_normal(sample, target_sd);
  d.n = sample.size();
  return d;
}

std::vector<CltSweepEntry> clt_sweep(const ExperimentConfig& cfg, const std::vector<int>& N_list,
                                     int j_margin, bool weighted) {
  cfg.validate();
  const int q = cfg.q_list.front();
  const double H = cfg.H_list.front();
  HermiteParams params{q, H};
  const MomentTable mt = moment_table(q, cfg.p);
  const WeightFn h = WeightFn::parse(cfg.h_name);
  std::vector<CltSweepEntry> out;
  for (int N : N_list) {
    SimGrid grid;
    grid.J = N + j_margin;
    grid.a = cfg.a;
    grid.eps = cfg.eps;
    grid.horizon = 1.0 + std::pow(2.0, -N);
    MeyerProfile profile = build_profile(params.delta());
    WeightTable weights = build_weight_table(profile, q, grid.max_diff());
    VariationConfig vc;
    vc.N = N;
    vc.gamma = cfg.gamma;
    vc.p = cfg.p;
    double limit_sd;
    if (weighted) {
      // limit variance m_p * ||h||_{L^2}^2
      double h2 = 0.0;
      const int nq = 1 << 12;
      for (int i = 0; i < nq; ++i) {
        const double x = (i + 0.5) / nq;
        h2 += h(x) * h(x) / nq;
      }
      limit_sd = std::sqrt(mt.m_p * h2);
    } else {
      limit_sd = std::sqrt(mt.m_p);
    }
    auto stats = parallel_reps(cfg.reps, cfg.threads, [&](int r) {
      const std::uint64_t seed = replication_seed(cfg.base_seed ^ (0xABCDu + N), r);
      HermitePath z = build_path(params, grid, weights, seed, Normalization::calibrated);
      auto incs = special_increments([&z](double t) { return z.eval(t); }, vc);
      if (weighted) return weighted_variation(incs, vc, H, h, mt.mu_p) / limit_sd;
      const double S = modified_power_variation(incs, vc, H);
      return centered_stat(S, vc, mt.mu_p) / limit_sd;
    });
    CltSweepEntry e;
    e.N = N;
    e.sample_var = variance(stats);
    e.diag = normality_diagnostics(stats, 1.0);
    out.push_back(e);
  }
  return out;
}

static nlohmann::json config_json(const ExperimentConfig& c) {
  auto norm_name = [](Normalization n) {
    switch (n) {
      case Normalization::raw: return "raw";
      case Normalization::standardized: return "standardized";
      case Normalization::calibrated: return "calibrated";
    }
    return "?";
  };
  return {{"q_list", c.q_list}, {"H_list", c.H_list}, {"J", c.J}, {"a", c.a},
          {"eps", c.eps},       {"N", c.N},           {"gamma", c.gamma},
          {"p", c.p},           {"h", c.h_name},      {"reps", c.reps},
          {"base_seed", c.base_seed},
          {"normalization", {{"q1", norm_name(c.norm_q1)}, {"q2_q3", norm_name(c.norm_qhigh)}}}};
}

std::string to_json(const McReport& report, bool with_meta) {
  nlohmann::json j;
  j["schema"] = "hermite-mc-report/1";
  j["status"] = report.status;
  j["config"] = config_json(report.config);
  j["cells"] = nlohmann::json::array();
  for (const auto& c : report.cells) {
    nlohmann::json jc{{"q", c.q}, {"H", c.H}, {"m", c.m}, {"s", c.s},
                      {"values", c.values}, {"seeds", c.seeds}};
    j["cells"].push_back(jc);
  }
  if (with_meta) {
    double wall = 0.0;
    for (const auto& c : report.cells) wall += c.wall_seconds;
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    j["meta"] = {{"timestamp_unix_ms",
                  std::chrono::duration_cast<std::chrono::milliseconds>(now).count()},
                 {"wall_seconds", wall},
                 {"version", "1.0.0"}};
  }
  return j.dump(2);
}

std::string to_csv(const McReport& report) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3);
  os << "q,stat";
  for (double H : report.config.H_list) os << ",H=" << std::setprecision(1) << H
                                           << std::setprecision(3);
  os << "\n";
  for (int q : report.config.q_list) {
    os << q << ",m";
    for (double H : report.config.H_list) os << "," << report.cell(q, H).m;
    os << "\n" << q << ",s";
    for (double H : report.config.H_list) os << "," << report.cell(q, H).s;
    os << "\n";
  }
  return os.str();
}

void write_report(const McReport& report, const std::string& path, const std::string& format) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("write_report: cannot open " + path);
  if (format == "csv")
    f << to_csv(report);
  else if (format == "json")
    f << to_json(report);
  else
    throw std::invalid_argument("write_report: format must be csv or json");
}

}  // namespace hermite
