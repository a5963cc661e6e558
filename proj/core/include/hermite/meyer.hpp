#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace hermite {

// Meyer fractional scaling function Phi_Delta^(delta) and the product-integral
// weight tables  w(d) = int prod_l Phi(s - k_l) ds  used by the simulator.

// Fourier profile of the standard Meyer scaling function (real, even;
// supported on |xi| <= 4pi/3).
double hat_phi(double xi);

// Fractional variant ((1 - e^{-i xi}) / (i xi))^delta * hat_phi(xi), principal
// branch, value 1 at xi = 0.
std::complex<double> hat_phi_delta(double xi, double delta);

struct MeyerProfile {
  double delta = 0.0;
  double S = 64.0;   // spatial half-width
  double ds = 0.0;   // spatial step
  std::vector<double> s;       // grid over [-S, S)
  std::vector<double> values;  // Phi_Delta^(delta)(s)

  // integer-shifted lookup helper: value at grid point i shifted by k cells
  double integral() const;  // quadrature of values * ds
};

// Band-limited inverse Fourier synthesis on [-S, S) with step ds.
// Requires pi/ds > 4pi/3.
MeyerProfile build_profile(double delta, double spatial_halfwidth = 64.0,
                           double ds = 1.0 / 256.0);

struct WeightTable {
  int q = 1;
  double delta = 0.0;
  int max_diff = 0;
  // key: sorted difference vector (k_2-k_1, ..., k_q-k_1), size q-1
  std::map<std::vector<int>, double> entries;

  double at(std::vector<int> diffs) const;  // sorts, then looks up
};

// Weight for an arbitrary (unsorted) shift vector, by direct quadrature.
double weight_integral(const MeyerProfile& profile, const std::vector<int>& shifts);

// All sorted difference vectors with entries in [0, max_diff].
WeightTable build_weight_table(const MeyerProfile& profile, int q, int max_diff);

// Independent Parseval evaluation of the pair weight int Phi(s)Phi(s-k) ds
// (q=2 path), used as an oracle:  (1/2pi) int |hat|^2 e^{i k xi} d xi.
double pair_weight_parseval(double delta, int k, double dxi = 1e-5);

// CSV cache round-trip (header records delta, q, ds, S, max_diff).
void save_weight_table(const WeightTable& table, double ds, double S,
                       const std::string& path);
WeightTable load_weight_table(const std::string& path);

}  // namespace hermite
