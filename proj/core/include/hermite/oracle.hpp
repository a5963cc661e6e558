#pragma once

#include <cstdint>
#include <vector>

namespace hermite::oracle {

// Desk-scale discretized multiple Wiener-Ito integrals of the Hermite kernel
//   f_u(y) = prod_l (u - y_l)_+^{delta - 1},  delta - 1 = -(1/2 + (1-H)/q),
// used as an independent validation layer. The y-axis is a uniform grid of M
// cells on [-Y, T]; u-integrals use midpoint cells of width du. Cell values of
// the singular factor are exact cell averages via the antiderivative.

struct KernelGrid {
  int q = 2;
  double H = 0.7;
  double Y = 8.0;    // left truncation
  double T = 1.0;    // right end of the y-grid
  int M = 1 << 9;    // y-cells
  double du = 1.0 / 512.0;

  double dy() const { return (T + Y) / M; }
  double y_lo(int i) const { return -Y + i * dy(); }
  double a() const;  // kernel exponent delta - 1, in (-1, -1/2)
  void validate() const;
};

// Cell-averaged kernel factor: (1/dy) int_cell (u - y)_+^a dy.
double kernel_cell(const KernelGrid& grid, double u, int cell);

// d(q,H) making the discretized E Z_1^2 equal 1 (direct summation of
// q! ||L~_1||^2 via elementary symmetric polynomials).
double calibrate_normalization(const KernelGrid& grid);

// Exact discretized second moment E[(I_q over u-window [u0,u1])^2] given d,
// optionally restricting the kernel support to y in [lo, hi] per coordinate.
double window_second_moment(const KernelGrid& grid, double d, double u0, double u1);
double window_second_moment_restricted(const KernelGrid& grid, double d, double u0, double u1,
                                       double lo, double hi);

// One chaos draw of Z at the listed times on shared cell noise.
std::vector<double> discrete_hermite_sample(const KernelGrid& grid, double d,
                                            const std::vector<double>& times,
                                            std::uint64_t seed);

struct IncrementDecomposition {
  double dZ = 0.0;
  double dZ_main = 0.0;   // y restricted to A_{l,N}^q
  double dZ_rest = 0.0;   // complement (off the cube), so dZ = main + rest
};

// A_{l,N} = (l/L - 2^{floor(N^beta)} 2^{-N} + 2^{-N},  l/L + 2^{-N}).
struct IncrementConfig {
  int N = 5;
  double gamma = 0.95;
  double beta = 0.6;
  long L() const;      // 2^{floor(N^gamma)}
  double A_lo(long l) const;
  double A_hi(long l) const;
  void validate() const;  // enforces N >= 2^{1/(1-beta)}
};

IncrementDecomposition increment_decomposition(const KernelGrid& grid, double d,
                                               const IncrementConfig& cfg, long l,
                                               std::uint64_t seed);

// Joint draw of all main increments {dZ_main(l)}_{l=1..L} on shared noise.
std::vector<double> joint_main_increments(const KernelGrid& grid, double d,
                                          const IncrementConfig& cfg, std::uint64_t seed);

// Discrete off-diagonal multiple integral of a product kernel
// prod_l factor_l(y_l) (factors given per cell, length M), on given noise.
double discrete_multiple_integral(const std::vector<std::vector<double>>& factors,
                                  const std::vector<double>& dB);

// Both sides of the product formula I_p(f) I_q(g) = sum_r r! C(p,r) C(q,r)
// I_{p+q-2r}(f tensor_r g) for product kernels f = f1^{(x)p}, g = g1^{(x)q}.
struct ProductFormulaResult {
  double lhs = 0.0;
  double rhs = 0.0;
};
ProductFormulaResult product_formula_check(const std::vector<double>& f1,
                                           const std::vector<double>& g1, int p, int q,
                                           double dy, const std::vector<double>& dB);

}  // namespace hermite::oracle
