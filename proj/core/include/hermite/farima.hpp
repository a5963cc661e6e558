#pragma once

#include <cstdint>
#include <vector>

namespace hermite {

// Stationary Gaussian FARIMA(0, delta, 0) sequence with unit-variance
// innovations, as an MA(inf) filter with coefficients
//   psi_0 = 1,  psi_p = delta * Gamma(p+delta) / (Gamma(p+1) Gamma(delta+1)).
struct FarimaParams {
  double delta = 0.25;     // memory order, in (0, 1/2)
  std::size_t length = 0;  // number of consecutive values
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

struct FarimaSequence {
  std::vector<double> values;
  double delta = 0.0;
  long start_index = 0;  // lattice index of values[0]

  double at(long idx) const { return values.at(static_cast<std::size_t>(idx - start_index)); }
};

// MA coefficient psi_p (the paper's gamma_p^(delta)); p = 0 gives 1.
double ma_coefficient(double delta, std::size_t p);

// Autocovariance gamma(k), closed form
//   gamma(k) = Gamma(1-2d) Gamma(k+d) / (Gamma(d) Gamma(1-d) Gamma(k+1-d)).
double autocovariance(double delta, std::size_t lag);

// Independent slow oracle: partial sum of psi_p psi_{p+k} to p <= 2^20 plus an
// analytic power-law tail (the raw tail decays like P^{2delta-1}, far too slow
// to truncate at 1e-12; the tail is summed via a fitted 1/p expansion and
// Euler-Maclaurin zeta tails). Used by tests to cross-check the closed form.
double autocovariance_series(double delta, std::size_t lag);

// Exact draw via circulant embedding (Davies-Harte). Deterministic given seed.
// Throws std::runtime_error if the embedded circulant has an eigenvalue below
// -1e-8 * max even after doubling the embedding (never observed for FARIMA).
FarimaSequence generate(const FarimaParams& params);

}  // namespace hermite
