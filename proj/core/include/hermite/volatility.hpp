#pragma once

#include <vector>

#include "hermite/simulator.hpp"
#include "hermite/variations.hpp"

namespace hermite {

// Piecewise-linear approximant of X_t = int_0^t h(s) dZ_s built over the
// Hermite path's nodes (cumulative form; the initial segment is the ramp
// h(0) * s_{m0,J} * t / t_{m0}).
struct VolatilityPath {
  SimGrid grid;
  std::vector<double> node_values;  // X_J(t_m), m = m0..m_max

  double eval(double t) const;
};

VolatilityPath build_X_path(const HermitePath& hermite, const WeightFn& h);

// S_{N,p}(X) over the special increments of X.
double estimate_integrated_volatility(const VolatilityPath& x, const VariationConfig& cfg,
                                      double H);

// mu_p * int_0^1 h(s)^p ds; closed forms for built-ins at p=2, adaptive
// Simpson quadrature otherwise.
double target_value(const WeightFn& h, int p, double mu_p);

// V_{N,p}(X) = sqrt(L) (S - target).
double centered_volatility_stat(double S_value, const VariationConfig& cfg, double target);

}  // namespace hermite
