#pragma once

#include <cstdint>
#include <vector>

#include "hermite/farima.hpp"
#include "hermite/meyer.hpp"

namespace hermite {

// Overall scaling of the wavelet-FARIMA construction. The tuple sum itself is
// built from unit-innovation FARIMA values with gamma-centered coefficients;
// the mode multiplies the resulting path by a constant:
//   raw           1                      (the construction as displayed)
//   standardized  gamma(0)^{-q/2}        (unit-variance FARIMA marginals)
//   calibrated    kappa(q,H)             (exact: E path(t)^2 -> t^{2H})
enum class Normalization { raw, standardized, calibrated };

struct HermiteParams {
  int q = 1;          // chaos order, 1..3
  double H = 0.7;     // Hurst index, (1/2, 1)
  double delta() const { return (H - 1.0) / q + 0.5; }
  void validate() const;
};

struct SimGrid {
  int J = 18;
  double a = 0.99;
  double eps = 1e-3;
  double horizon = 1.0;

  long m0() const;         // smallest integer >= 2^{J(1-a)}
  long m_max() const;      // largest m with t_m <= horizon, plus one
  int max_diff() const;    // floor(2^{eps J})
  double t(long m) const;  // node time m 2^{-J} + 2^{-aJ}
  void validate() const;
};

// kappa(q,H)^2 = H(2H-1) Gamma(delta)^{2q} / (q! beta(1-2delta,delta)^q);
// at q=1 this reduces to the beta identity for fractional Brownian motion.
double calibration_constant(const HermiteParams& params);

double normalization_factor(const HermiteParams& params, Normalization mode);

// Wick/partition-centered coefficient sigma_{J,k}; generic over pair
// partitions for any q, with explicit fast paths for q <= 3.
double sigma_coefficient(const HermiteParams& params, const FarimaSequence& farima,
                         const std::vector<long>& k);
double sigma_coefficient_generic(const HermiteParams& params, const FarimaSequence& farima,
                                 const std::vector<long>& k);

// Node values s_{m,J} for m = m0..m_max, computed incrementally over tuples
// with max entry m and pairwise gaps <= max_diff. `farima` must cover
// [m0 - max_diff, m_max] (with start_index <= m0 - max_diff).
std::vector<double> partial_sums(const HermiteParams& params, const SimGrid& grid,
                                 const WeightTable& weights, const FarimaSequence& farima);

// Brute-force tuple enumeration for one m (test oracle).
double partial_sum_bruteforce(const HermiteParams& params, const SimGrid& grid,
                              const WeightTable& weights, const FarimaSequence& farima,
                              long m);

struct HermitePath {
  HermiteParams params;
  SimGrid grid;
  std::vector<double> node_values;  // s_{m,J}, m = m0..m_max
  std::uint64_t seed = 0;

  double eval(double t) const;  // piecewise-linear, ramp on [0, t_{m0})
};

HermitePath build_path(const HermiteParams& params, const SimGrid& grid,
                       const WeightTable& weights, std::uint64_t seed,
                       Normalization mode = Normalization::calibrated);

}  // namespace hermite
