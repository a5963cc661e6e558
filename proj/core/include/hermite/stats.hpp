#pragma once

#include <vector>

namespace hermite {

double mean(const std::vector<double>& xs);
double variance(const std::vector<double>& xs);  // divisor n-1
double sample_sd(const std::vector<double>& xs);

// KS sup-distance between the empirical cdf of xs and N(0, sd^2).
double ks_against_normal(std::vector<double> xs, double sd);

// Wasserstein-1 against N(0, sd^2) via order statistics:
//   (1/n) sum |x_(i) - sd * Phi^{-1}((i-1/2)/n)|.
double wasserstein1_against_normal(std::vector<double> xs, double sd);

// Lag-1 sample autocorrelation.
double lag1_autocorrelation(const std::vector<double>& xs);

// Pearson correlation of two equal-length samples.
double correlation(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace hermite
