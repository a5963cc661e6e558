#pragma once

#include <cmath>
#include <stdexcept>

namespace hermite {

// log Gamma on the positive axis.
inline double lgam(double x) { return std::lgamma(x); }

inline double beta_fn(double a, double b) {
  return std::exp(lgam(a) + lgam(b) - lgam(a + b));
}

// Standard normal pdf / cdf.
inline double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
}

inline double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

// Inverse standard normal cdf (Acklam's rational approximation, refined by
// one Newton step; absolute error well below 1e-12 on (1e-300, 1-1e-16)).
double normal_quantile(double p);

// Hurwitz-style tail sum  sum_{p > P} p^{-s}  for s > 1, via Euler-Maclaurin.
double power_tail_sum(double s, double P);

}  // namespace hermite
