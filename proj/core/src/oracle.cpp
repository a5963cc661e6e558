#include "hermite/oracle.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hermite/rng.hpp"

namespace hermite::oracle {

void KernelGrid::validate() const {
  if (q < 1 || q > 3) throw std::invalid_argument("KernelGrid: q must be 1..3");
  if (!(H > 0.5 && H < 1.0)) throw std::invalid_argument("KernelGrid: H outside (1/2,1)");
  if (M < 4 || !(du > 0.0) || !(Y > 0.0) || !(T > 0.0))
    throw std::invalid_argument("KernelGrid: bad discretization");
  const double ex = a();
  if (!(ex > -1.0 && ex < -0.5)) throw std::logic_error("KernelGrid: exponent escaped (-1,-1/2)");
}

double KernelGrid::a() const { return (H - 1.0) / q - 0.5; }

double kernel_cell(const KernelGrid& grid, double u, int cell) {
  const double a1 = grid.a() + 1.0;
  const double lo = grid.y_lo(cell), hi = lo + grid.dy();
  const double plo = u > lo ? std::pow(u - lo, a1) : 0.0;
  const double phi = u > hi ? std::pow(u - hi, a1) : 0.0;
  return (plo - phi) / (a1 * grid.dy());
}

namespace {

// elementary symmetric polynomial e_q via power sums (Newton's identities)
double esym(int q, const std::vector<double>& v) {
  double p1 = 0.0, p2 = 0.0, p3 = 0.0;
  for (double x : v) {
    p1 += x;
    if (q >= 2) p2 += x * x;
    if (q >= 3) p3 += x * x * x;
  }
  switch (q) {
    case 1: return p1;
    case 2: return 0.5 * (p1 * p1 - p2);
    case 3: return (p1 * p1 * p1 - 3.0 * p1 * p2 + 2.0 * p3) / 6.0;
    default: throw std::invalid_argument("esym: q must be 1..3");
  }
}

double qfactorial(int q) { return q == 3 ? 6.0 : (q == 2 ? 2.0 : 1.0); }

std::vector<int> cells_in(const KernelGrid& grid, double lo, double hi) {
  std::vector<int> cells;
  for (int i = 0; i < grid.M; ++i) {
    const double mid = grid.y_lo(i) + 0.5 * grid.dy();
    if (mid > lo && mid < hi) cells.push_back(i);
  }
  return cells;
}

double second_moment_impl(const KernelGrid& grid, double d, double u0, double u1,
                          const std::vector<int>& cells) {
  grid.validate();
  const int U = static_cast<int>(std::llround((u1 - u0) / grid.du));
  std::vector<std::vector<double>> K(U, std::vector<double>(cells.size()));
  for (int j = 0; j < U; ++j) {
    const double u = u0 + (j + 0.5) * grid.du;
    for (std::size_t c = 0; c < cells.size(); ++c) K[j][c] = kernel_cell(grid, u, cells[c]);
  }
  const double dy = grid.dy();
  std::vector<double> w(cells.size());
  double acc = 0.0;
  for (int j = 0; j < U; ++j)
    for (int jp = 0; jp < U; ++jp) {
      for (std::size_t c = 0; c < cells.size(); ++c) w[c] = K[j][c] * K[jp][c] * dy;
      acc += esym(grid.q, w);
    }
  // the sampled window integral is d q! du sum_u e_q, so its second moment
  // carries (q!)^2: the set-matching expectation contributes one e_q(w) term
  // per distinct cell set
  const double qf = qfactorial(grid.q);
  return d * d * qf * qf * grid.du * grid.du * acc;
}

}  // namespace

double window_second_moment(const KernelGrid& grid, double d, double u0, double u1) {
  std::vector<int> all(grid.M);
  for (int i = 0; i < grid.M; ++i) all[i] = i;
  return second_moment_impl(grid, d, u0, u1, all);
}

double window_second_moment_restricted(const KernelGrid& grid, double d, double u0, double u1,
                                       double lo, double hi) {
  return second_moment_impl(grid, d, u0, u1, cells_in(grid, lo, hi));
}

double calibrate_normalization(const KernelGrid& grid) {
  const double m2 = window_second_moment(grid, 1.0, 0.0, 1.0);
  if (!(m2 > 0.0)) throw std::runtime_error("calibrate_normalization: degenerate grid");
  return 1.0 / std::sqrt(m2);
}

namespace {

std::vector<double> draw_cell_noise(const KernelGrid& grid, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double sd = std::sqrt(grid.dy());
  std::vector<double> dB(static_cast<std::size_t>(grid.M));
  for (auto& v : dB) v = sd * normal(rng);
  return dB;
}

// I_q over u-window on given noise, restricted to the listed cells.
double window_integral(const KernelGrid& grid, double d, double u0, double u1,
                       const std::vector<int>& cells, const std::vector<double>& dB) {
  const int U = static_cast<int>(std::llround((u1 - u0) / grid.du));
  std::vector<double> v(cells.size());
  double acc = 0.0;
  for (int j = 0; j < U; ++j) {
    const double u = u0 + (j + 0.5) * grid.du;
    for (std::size_t c = 0; c < cells.size(); ++c)
      v[c] = kernel_cell(grid, u, cells[c]) * dB[static_cast<std::size_t>(cells[c])];
    acc += esym(grid.q, v);
  }
  return d * qfactorial(grid.q) * grid.du * acc;
}

}  // namespace

std::vector<double> discrete_hermite_sample(const KernelGrid& grid, double d,
                                            const std::vector<double>& times,
                                            std::uint64_t seed) {
  grid.validate();
  Rng rng = make_rng(seed);
  auto dB = draw_cell_noise(grid, rng);
  std::vector<int> all(grid.M);
  for (int i = 0; i < grid.M; ++i) all[i] = i;
  std::vector<double> out;
  out.reserve(times.size());
  for (double t : times) {
    if (t > grid.T + 1e-12) throw std::invalid_argument("discrete_hermite_sample: t beyond grid");
    out.push_back(window_integral(grid, d, 0.0, t, all, dB));
  }
  return out;
}

long IncrementConfig::L() const {
  return 1L << static_cast<long>(std::floor(std::pow(static_cast<double>(N), gamma) + 1e-12));
}

double IncrementConfig::A_lo(long l) const {
  const long be = static_cast<long>(std::floor(std::pow(static_cast<double>(N), beta) + 1e-12));
  return static_cast<double>(l) / static_cast<double>(L()) -
         std::pow(2.0, static_cast<double>(be) - N) + std::pow(2.0, -N);
}

double IncrementConfig::A_hi(long l) const {
  return static_cast<double>(l) / static_cast<double>(L()) + std::pow(2.0, -N);
}

void IncrementConfig::validate() const {
  if (!(beta > 0.0 && beta < 1.0) || !(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("IncrementConfig: beta, gamma must lie in (0,1)");
  if (static_cast<double>(N) < std::pow(2.0, 1.0 / (1.0 - beta)))
    throw std::invalid_argument("IncrementConfig: need N >= 2^{1/(1-beta)}");
}

IncrementDecomposition increment_decomposition(const KernelGrid& grid, double d,
                                               const IncrementConfig& cfg, long l,
                                               std::uint64_t seed) {
  grid.validate();
  cfg.validate();
  Rng rng = make_rng(seed);
  auto dB = draw_cell_noise(grid, rng);
  std::vector<int> all(grid.M);
  for (int i = 0; i < grid.M; ++i) all[i] = i;
  const double t1 = static_cast<double>(l) / static_cast<double>(cfg.L());
  const double t2 = t1 + std::pow(2.0, -cfg.N);
  IncrementDecomposition out;
  out.dZ = window_integral(grid, d, t1, t2, all, dB);
  out.dZ_main = window_integral(grid, d, t1, t2, cells_in(grid, cfg.A_lo(l), cfg.A_hi(l)), dB);
  out.dZ_rest = out.dZ - out.dZ_main;
  return out;
}

std::vector<double> joint_main_increments(const KernelGrid& grid, double d,
                                          const IncrementConfig& cfg, std::uint64_t seed) {
  grid.validate();
  cfg.validate();
  Rng rng = make_rng(seed);
  auto dB = draw_cell_noise(grid, rng);
  std::vector<double> out;
  const long L = cfg.L();
  out.reserve(static_cast<std::size_t>(L));
  for (long l = 1; l <= L; ++l) {
    const double t1 = static_cast<double>(l) / static_cast<double>(L);
    const double t2 = t1 + std::pow(2.0, -cfg.N);
    out.push_back(window_integral(grid, d, t1, t2, cells_in(grid, cfg.A_lo(l), cfg.A_hi(l)), dB));
  }
  return out;
}

namespace {

// Sum over ordered tuples of pairwise-distinct indices of
// prod_l factors[l][i_l] * dB[i_l], by Moebius inversion over set partitions.
double distinct_tuple_sum(const std::vector<std::vector<double>>& factors,
                          const std::vector<double>& dB) {
  const int n = static_cast<int>(factors.size());
  if (n == 0) return 1.0;
  const std::size_t M = dB.size();
  // enumerate set partitions of {0..n-1}
  double total = 0.0;
  std::vector<std::vector<int>> blocks;
  std::function<void(int)> rec = [&](int item) {
    if (item == n) {
      double term = 1.0;
      for (const auto& B : blocks) {
        double s = 0.0;
        for (std::size_t i = 0; i < M; ++i) {
          double prod = 1.0;
          for (int l : B) prod *= factors[static_cast<std::size_t>(l)][i] * dB[i];
          s += prod;
        }
        double sign = 1.0;
        for (std::size_t j = 1; j < B.size(); ++j) sign *= -static_cast<double>(j);
        term *= sign * s;
      }
      total += term;
      return;
    }
    for (auto& B : blocks) {
      B.push_back(item);
      rec(item + 1);
      B.pop_back();
    }
    blocks.push_back({item});
    rec(item + 1);
    blocks.pop_back();
  };
  rec(0);
  return total;
}

}  // namespace

double discrete_multiple_integral(const std::vector<std::vector<double>>& factors,
                                  const std::vector<double>& dB) {
  if (factors.size() > 4)
    throw std::invalid_argument("discrete_multiple_integral: order > 4 not supported");
  return distinct_tuple_sum(factors, dB);
}

ProductFormulaResult product_formula_check(const std::vector<double>& f1,
                                           const std::vector<double>& g1, int p, int q,
                                           double dy, const std::vector<double>& dB) {
  if (p + q > 4) throw std::invalid_argument("product_formula_check: p+q must be <= 4");
  ProductFormulaResult out;
  std::vector<std::vector<double>> fs(static_cast<std::size_t>(p), f1);
  std::vector<std::vector<double>> gs(static_cast<std::size_t>(q), g1);
  out.lhs = discrete_multiple_integral(fs, dB) * discrete_multiple_integral(gs, dB);

  double inner = 0.0;
  for (std::size_t i = 0; i < f1.size(); ++i) inner += f1[i] * g1[i] * dy;
  auto binom = [](int n, int r) {
    double v = 1.0;
    for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
    return v;
  };
  for (int r = 0; r <= std::min(p, q); ++r) {
    double rfact = 1.0;
    for (int i = 2; i <= r; ++i) rfact *= i;
    std::vector<std::vector<double>> mixed;
    for (int i = 0; i < p - r; ++i) mixed.push_back(f1);
    for (int i = 0; i < q - r; ++i) mixed.push_back(g1);
    out.rhs += rfact * binom(p, r) * binom(q, r) * std::pow(inner, r) *
               discrete_multiple_integral(mixed, dB);
  }
  return out;
}

}  // namespace hermite::oracle
