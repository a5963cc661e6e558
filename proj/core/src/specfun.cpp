#include "hermite/specfun.hpp"

namespace hermite {

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p outside (0,1)");
  // Acklam's coefficients.
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1.0 - plow;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= phigh) {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  // One Halley refinement.
  const double e = normal_cdf(x) - p;
  const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
  x = x - u / (1.0 + 0.5 * x * u);
  return x;
}

double power_tail_sum(double s, double P) {
  // sum_{p=P+1}^{inf} p^{-s} via Euler-Maclaurin around P:
  //   = P^{1-s}/(s-1) - P^{-s}/2 + s P^{-s-1}/12 - s(s+1)(s+2) P^{-s-3}/720 + ...
  if (s <= 1.0) throw std::domain_error("power_tail_sum needs s > 1");
  const double t1 = std::pow(P, 1.0 - s) / (s - 1.0);
  const double t2 = -0.5 * std::pow(P, -s);
  const double t3 = s * std::pow(P, -s - 1.0) / 12.0;
  const double t4 = -s * (s + 1.0) * (s + 2.0) * std::pow(P, -s - 3.0) / 720.0;
  const double t5 = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) *
                    std::pow(P, -s - 5.0) / 30240.0;
  return t1 + t2 + t3 + t4 + t5;
}

}  // namespace hermite
