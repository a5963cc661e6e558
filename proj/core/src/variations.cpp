#include "hermite/variations.hpp"

#include <cmath>
#include <stdexcept>

#include "hermite/stats.hpp"

namespace hermite {

void VariationConfig::validate() const {
  if (N < 1) throw std::invalid_argument("VariationConfig: N must be positive");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("VariationConfig: gamma must lie in (0,1)");
  if (p < 2) throw std::invalid_argument("VariationConfig: p must be >= 2");
}

long VariationConfig::Lexp() const {
  return static_cast<long>(std::floor(std::pow(static_cast<double>(N), gamma) + 1e-12));
}

long VariationConfig::L() const { return 1L << Lexp(); }

double WeightFn::operator()(double s) const {
  switch (kind) {
    case Kind::identity: return s;
    case Kind::cube: return s * s * s;
    case Kind::exp: return std::exp(s);
    case Kind::sqrt: return std::sqrt(s);
    case Kind::constant: return const_value;
    case Kind::custom: return custom(s);
  }
  throw std::logic_error("unknown weight kind");
}

WeightFn WeightFn::parse(const std::string& name) {
  WeightFn h;
  if (name == "identity") { h.kind = Kind::identity; h.holder_alpha = 1.0; }
  else if (name == "cube") { h.kind = Kind::cube; h.holder_alpha = 1.0; }
  else if (name == "exp") { h.kind = Kind::exp; h.holder_alpha = 1.0; }
  else if (name == "sqrt") { h.kind = Kind::sqrt; h.holder_alpha = 0.5; }
  else if (name == "const" || name == "constant" || name == "one") {
    h.kind = Kind::constant;
    h.holder_alpha = 1.0;
  }
  else throw std::invalid_argument("unknown weight function: " + name);
  return h;
}

std::string WeightFn::name() const {
  switch (kind) {
    case Kind::identity: return "identity";
    case Kind::cube: return "cube";
    case Kind::exp: return "exp";
    case Kind::sqrt: return "sqrt";
    case Kind::constant: return "const";
    case Kind::custom: return "custom";
  }
  return "?";
}

std::vector<double> special_increments(const std::function<double(double)>& path_eval,
                                       const VariationConfig& cfg) {
  cfg.validate();
  const long L = cfg.L();
  const double invL = 1.0 / static_cast<double>(L);
  const double len = std::pow(2.0, -cfg.N);
  std::vector<double> out(static_cast<std::size_t>(L));
  for (long l = 1; l <= L; ++l) {
    const double t = static_cast<double>(l) * invL;
    out[static_cast<std::size_t>(l - 1)] = path_eval(t + len) - path_eval(t);
  }
  return out;
}

double modified_power_variation(const std::vector<double>& incs, const VariationConfig& cfg,
                                double H) {
  if (incs.size() != static_cast<std::size_t>(cfg.L()))
    throw std::invalid_argument("modified_power_variation: wrong increment count");
  const double scale = std::pow(2.0, cfg.p * H * cfg.N);
  double sum = 0.0;
  for (double v : incs) {
    double pw = v;
    for (int i = 1; i < cfg.p; ++i) pw *= v;
    sum += pw;
  }
  return scale * sum / static_cast<double>(cfg.L());
}

double centered_stat(double S_value, const VariationConfig& cfg, double mu_p) {
  return std::sqrt(static_cast<double>(cfg.L())) * (S_value - mu_p);
}

double weighted_variation(const std::vector<double>& incs, const VariationConfig& cfg,
                          double H, const WeightFn& h, double mu_p) {
  if (incs.size() != static_cast<std::size_t>(cfg.L()))
    throw std::invalid_argument("weighted_variation: wrong increment count");
  const long L = cfg.L();
  const double scale = std::pow(2.0, cfg.p * H * cfg.N);
  const double center = std::pow(2.0, -cfg.p * H * cfg.N) * mu_p;
  double sum = 0.0;
  for (long l = 1; l <= L; ++l) {
    const double v = incs[static_cast<std::size_t>(l - 1)];
    double pw = v;
    for (int i = 1; i < cfg.p; ++i) pw *= v;
    sum += h(static_cast<double>(l) / static_cast<double>(L)) * (pw - center);
  }
  return scale * sum / std::sqrt(static_cast<double>(L));
}

double gaussian_moment(int p) {
  if (p < 0) throw std::invalid_argument("gaussian_moment: negative order");
  if (p % 2 == 1) return 0.0;
  double m = 1.0;
  for (int i = p - 1; i > 1; i -= 2) m *= i;
  return m;
}

MomentTable moment_table(int q, int p, const std::vector<double>& z1_samples) {
  MomentTable t;
  t.q = q;
  t.p = p;
  if (q == 1) {
    t.mu_p = gaussian_moment(p);
    t.m_p = gaussian_moment(2 * p) - t.mu_p * t.mu_p;
    t.closed_form = true;
    return t;
  }
  if (p == 2) {
    t.mu_p = 1.0;  // E Z_1^2 = 1
    t.closed_form = true;
  }
  if (!z1_samples.empty()) {
    std::vector<double> pw(z1_samples.size());
    for (std::size_t i = 0; i < pw.size(); ++i) {
      double v = z1_samples[i], acc = v;
      for (int j = 1; j < p; ++j) acc *= v;
      pw[i] = acc;
    }
    const double mu = mean(pw);
    const double var = variance(pw);
    if (p != 2) {
      t.mu_p = mu;
      t.closed_form = false;
      t.mu_std_err = std::sqrt(var / static_cast<double>(pw.size()));
    }
    t.m_p = var;
  } else if (p != 2) {
    throw std::invalid_argument("moment_table: q>1, p!=2 needs Monte Carlo samples of Z_1");
  }
  return t;
}

}  // namespace hermite
