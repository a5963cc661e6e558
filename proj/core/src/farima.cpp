#include "hermite/farima.hpp"

#include <cmath>
#include <stdexcept>

#include "hermite/rng.hpp"
#include "hermite/specfun.hpp"
#include "fft_util.hpp"

namespace hermite {

void FarimaParams::validate() const {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("FARIMA delta must lie in (0, 1/2)");
  if (length == 0) throw std::invalid_argument("FARIMA length must be >= 1");
}

double ma_coefficient(double delta, std::size_t p) {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("ma_coefficient: delta outside (0, 1/2)");
  if (p == 0) return 1.0;
  const double dp = static_cast<double>(p);
  return delta * std::exp(lgam(dp + delta) - lgam(dp + 1.0) - lgam(delta + 1.0));
}

double autocovariance(double delta, std::size_t lag) {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("autocovariance: delta outside (0, 1/2)");
  const double k = static_cast<double>(lag);
  return std::exp(lgam(1.0 - 2.0 * delta) + lgam(k + delta) - lgam(delta) -
                  lgam(1.0 - delta) - lgam(k + 1.0 - delta));
}

double autocovariance_series(double delta, std::size_t lag) {
  if (!(delta > 0.0 && delta < 0.5))
    throw std::invalid_argument("autocovariance_series: delta outside (0, 1/2)");
  const std::size_t P = std::size_t(1) << 20;
  const double k = static_cast<double>(lag);

  // Exact partial sum via the recurrence psi_{p+1} = psi_p (p+delta)/(p+1),
  // with separate tracking for psi_{p+lag}. Kahan-compensated.
  long double psi = 1.0L, psik = static_cast<long double>(ma_coefficient(delta, lag));
  long double sum = 0.0L, comp = 0.0L;
  for (std::size_t p = 0; p <= P; ++p) {
    const long double term = psi * psik - comp;
    const long double t = sum + term;
    comp = (t - sum) - term;
    sum = t;
    const long double dp = static_cast<long double>(p);
    psi *= (dp + delta) / (dp + 1.0L);
    psik *= (dp + k + delta) / (dp + k + 1.0L);
  }

  // Tail: f(p) = psi_p psi_{p+k} ~ p^{2delta-2} (c0 + c1/p + c2/p^2 + ...).
  // Fit c0..c2 from f at three large abscissae, then sum the fitted power
  // laws with Euler-Maclaurin zeta tails. f is obtained by continuing the
  // recurrence in long double: evaluating it via lgamma differences loses
  // ~1e-9 to cancellation at p ~ 1e6, which the O(1)-sized tail (delta near
  // 1/2) would inherit.
  const double p0 = static_cast<double>(P + 1);
  const double xs[3] = {p0, 2.0 * p0, 4.0 * p0};
  long double fv[3];
  {
    long double pp = psi, pk = psik;  // values at p = P + 1
    std::size_t p = P + 1;
    for (int i = 0; i < 3; ++i) {
      for (const auto target = static_cast<std::size_t>(xs[i]); p < target; ++p) {
        const long double dp = static_cast<long double>(p);
        pp *= (dp + delta) / (dp + 1.0L);
        pk *= (dp + k + delta) / (dp + k + 1.0L);
      }
      fv[i] = pp * pk;
    }
  }
  // Solve the 3x3 Vandermonde system in powers of 1/p for the c_j.
  long double A[3][4];
  for (int i = 0; i < 3; ++i) {
    const long double w = std::pow(static_cast<long double>(xs[i]),
                                   static_cast<long double>(2.0 * delta - 2.0));
    A[i][0] = w;
    A[i][1] = w / xs[i];
    A[i][2] = w / (xs[i] * xs[i]);
    A[i][3] = fv[i];
  }
  for (int c = 0; c < 3; ++c) {
    int piv = c;
    for (int r = c + 1; r < 3; ++r)
      if (std::fabs(static_cast<double>(A[r][c])) > std::fabs(static_cast<double>(A[piv][c]))) piv = r;
    for (int j = 0; j < 4; ++j) std::swap(A[c][j], A[piv][j]);
    for (int r = 0; r < 3; ++r) {
      if (r == c) continue;
      const long double m = A[r][c] / A[c][c];
      for (int j = c; j < 4; ++j) A[r][j] -= m * A[c][j];
    }
  }
  const long double c0 = A[0][3] / A[0][0], c1 = A[1][3] / A[1][1], c2 = A[2][3] / A[2][2];

  const double s0 = 2.0 - 2.0 * delta;
  long double tail = c0 * power_tail_sum(s0, static_cast<double>(P)) +
                     c1 * power_tail_sum(s0 + 1.0, static_cast<double>(P)) +
                     c2 * power_tail_sum(s0 + 2.0, static_cast<double>(P));
  return static_cast<double>(sum + tail);
}

FarimaSequence generate(const FarimaParams& params) {
  params.validate();
  const std::size_t n = params.length;

  // Smallest power-of-two circulant size >= 2(n-1), minimum 2.
  std::size_t M = 2;
  while (M < 2 * (n > 1 ? n - 1 : 1)) M <<= 1;

  for (int attempt = 0; attempt < 3; ++attempt, M <<= 1) {
    // First circulant row: gamma(0..M/2), then mirrored.
    std::vector<double> row(M);
    for (std::size_t j = 0; j <= M / 2; ++j) row[j] = autocovariance(params.delta, j);
    for (std::size_t j = M / 2 + 1; j < M; ++j) row[j] = row[M - j];

    auto lam = fft::rfft(row);  // real, = eigenvalues
    double maxlam = 0.0;
    bool bad = false;
    for (const auto& l : lam) maxlam = std::max(maxlam, l.real());
    for (auto& l : lam) {
      double v = l.real();
      if (v < -1e-8 * maxlam) { bad = true; break; }
      l = std::complex<double>(std::max(v, 0.0), 0.0);
    }
    if (bad) continue;  // embed larger and retry

    Rng rng = make_rng(params.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const std::size_t Mh = M / 2;
    std::vector<std::complex<double>> spec(Mh + 1);
    const double invM = 1.0 / static_cast<double>(M);
    spec[0] = std::sqrt(lam[0].real() * invM) * normal(rng);
    for (std::size_t j = 1; j < Mh; ++j) {
      const double a = normal(rng), b = normal(rng);
      spec[j] = std::sqrt(lam[j].real() * invM * 0.5) * std::complex<double>(a, b);
    }
    spec[Mh] = std::sqrt(lam[Mh].real() * invM) * normal(rng);

    auto full = fft::irfft(spec, M);
    // irfft scales by 1/M; undo it (the synthesis above already carries 1/M).
    FarimaSequence out;
    out.delta = params.delta;
    out.start_index = 0;
    out.values.assign(full.begin(), full.begin() + static_cast<long>(n));
    for (double& v : out.values) v *= static_cast<double>(M);
    return out;
  }
  throw std::runtime_error("circulant embedding failed: persistent negative eigenvalue");
}

}  // namespace hermite
