#include "hermite/volatility.hpp"

#include <cmath>
#include <stdexcept>

namespace hermite {

double VolatilityPath::eval(double t) const {
  if (t < 0.0 || t > grid.horizon + 1e-12)
    throw std::domain_error("VolatilityPath::eval: t outside [0, horizon]");
  const double t0 = grid.t(grid.m0());
  if (t < t0) return node_values.front() * (t / t0);
  const double pos = (t - t0) * std::pow(2.0, grid.J);
  long idx = static_cast<long>(pos);
  if (idx >= static_cast<long>(node_values.size()) - 1)
    idx = static_cast<long>(node_values.size()) - 2;
  const double frac = pos - static_cast<double>(idx);
  return node_values[idx] + frac * (node_values[idx + 1] - node_values[idx]);
}

VolatilityPath build_X_path(const HermitePath& hermite, const WeightFn& h) {
  VolatilityPath x;
  x.grid = hermite.grid;
  const std::vector<double>& s = hermite.node_values;
  x.node_values.resize(s.size());
  const long m0 = hermite.grid.m0();
  double acc = h(0.0) * s.front();
  x.node_values[0] = acc;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double tk = hermite.grid.t(m0 + static_cast<long>(i) - 1);
    acc += h(tk) * (s[i] - s[i - 1]);
    x.node_values[i] = acc;
  }
  return x;
}

double estimate_integrated_volatility(const VolatilityPath& x, const VariationConfig& cfg,
                                      double H) {
  auto incs = special_increments([&x](double t) { return x.eval(t); }, cfg);
  return modified_power_variation(incs, cfg, H);
}

namespace {

double simpson(const WeightFn& h, int p, double a, double b, int n) {
  double sum = 0.0;
  const double step = (b - a) / n;
  for (int i = 0; i < n; ++i) {
    const double x0 = a + i * step, x2 = x0 + step, x1 = 0.5 * (x0 + x2);
    auto f = [&](double x) {
      double v = h(x), acc = v;
      for (int j = 1; j < p; ++j) acc *= v;
      return acc;
    };
    sum += (f(x0) + 4.0 * f(x1) + f(x2)) * step / 6.0;
  }
  return sum;
}

}  // namespace

double target_value(const WeightFn& h, int p, double mu_p) {
  if (p == 2) {
    switch (h.kind) {
      case WeightFn::Kind::identity: return mu_p / 3.0;
      case WeightFn::Kind::cube: return mu_p / 7.0;
      case WeightFn::Kind::exp: return mu_p * (std::exp(2.0) - 1.0) / 2.0;
      case WeightFn::Kind::sqrt: return mu_p / 2.0;
      case WeightFn::Kind::constant: return mu_p * h.const_value * h.const_value;
      default: break;
    }
  }
  // quadrature fallback (sqrt has an endpoint kink; fine for p>=2 integrands)
  return mu_p * simpson(h, p, 0.0, 1.0, 1 << 12);
}

double centered_volatility_stat(double S_value, const VariationConfig& cfg, double target) {
  return std::sqrt(static_cast<double>(cfg.L())) * (S_value - target);
}

}  // namespace hermite
