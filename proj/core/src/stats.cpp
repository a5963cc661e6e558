#include "hermite/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermite/specfun.hpp"

namespace hermite {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty sample");
  double s = 0.0;
  for (double v : xs) s += v;
  return s / static_cast<double>(xs.size());
}

double variance(const std::vector<double>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance: need n >= 2");
  const double m = mean(xs);
  double s = 0.0;
  for (double v : xs) s += (v - m) * (v - m);
  return s / static_cast<double>(xs.size() - 1);
}

double sample_sd(const std::vector<double>& xs) { return std::sqrt(variance(xs)); }

double ks_against_normal(std::vector<double> xs, double sd) {
  if (xs.empty()) throw std::invalid_argument("ks_against_normal: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double F = normal_cdf(xs[i] / sd);
    d = std::max(d, std::fabs(F - static_cast<double>(i) / n));
    d = std::max(d, std::fabs(static_cast<double>(i + 1) / n - F));
  }
  return d;
}

double wasserstein1_against_normal(std::vector<double> xs, double sd) {
  if (xs.empty()) throw std::invalid_argument("wasserstein1: empty sample");
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double qth = sd * normal_quantile((static_cast<double>(i) + 0.5) / static_cast<double>(n));
    acc += std::fabs(xs[i] - qth);
  }
  return acc / static_cast<double>(n);
}

double lag1_autocorrelation(const std::vector<double>& xs) {
  if (xs.size() < 3) throw std::invalid_argument("lag1_autocorrelation: sample too small");
  const double m = mean(xs);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    den += (xs[i] - m) * (xs[i] - m);
    if (i + 1 < xs.size()) num += (xs[i] - m) * (xs[i + 1] - m);
  }
  return num / den;
}

double correlation(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw std::invalid_argument("correlation: size mismatch or too small");
  const double mx = mean(xs), my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace hermite
