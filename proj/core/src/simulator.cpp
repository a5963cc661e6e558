#include "hermite/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hermite/specfun.hpp"

namespace hermite {

void HermiteParams::validate() const {
  if (q < 1 || q > 3) throw std::invalid_argument("HermiteParams: q must be 1, 2 or 3");
  if (!(H > 0.5 && H < 1.0)) throw std::invalid_argument("HermiteParams: H must lie in (1/2, 1)");
}

void SimGrid::validate() const {
  if (J < 1) throw std::invalid_argument("SimGrid: J must be positive");
  if (!(a > 0.5 && a < 1.0)) throw std::invalid_argument("SimGrid: a must lie in (1/2, 1)");
  if (!(eps > 0.0)) throw std::invalid_argument("SimGrid: eps must be positive");
  if (!(horizon > 0.0)) throw std::invalid_argument("SimGrid: horizon must be positive");
}

long SimGrid::m0() const {
  return static_cast<long>(std::ceil(std::pow(2.0, J * (1.0 - a)) - 1e-12));
}

long SimGrid::m_max() const {
  const double off = std::pow(2.0, -a * J);
  return static_cast<long>(std::floor((horizon - off) * std::pow(2.0, J) + 1e-9)) + 1;
}

int SimGrid::max_diff() const {
  return static_cast<int>(std::floor(std::pow(2.0, eps * J)));
}

double SimGrid::t(long m) const {
  return static_cast<double>(m) * std::pow(2.0, -J) + std::pow(2.0, -a * J);
}

double calibration_constant(const HermiteParams& params) {
  const double d = params.delta();
  const double q = params.q;
  double qfact = 1.0;
  for (int i = 2; i <= params.q; ++i) qfact *= i;
  const double b = beta_fn(1.0 - 2.0 * d, d);
  const double kappa2 = params.H * (2.0 * params.H - 1.0) *
                        std::exp(2.0 * q * lgam(d)) / (qfact * std::pow(b, q));
  return std::sqrt(kappa2);
}

double normalization_factor(const HermiteParams& params, Normalization mode) {
  switch (mode) {
    case Normalization::raw:
      return 1.0;
    case Normalization::standardized:
      return std::pow(autocovariance(params.delta(), 0), -0.5 * params.q);
    case Normalization::calibrated:
      return calibration_constant(params);
  }
  throw std::logic_error("unknown normalization mode");
}

double sigma_coefficient_generic(const HermiteParams& params, const FarimaSequence& farima,
                                 const std::vector<long>& k) {
  const int q = params.q;
  if (static_cast<int>(k.size()) != q)
    throw std::invalid_argument("sigma_coefficient: tuple length != q");
  const double d = params.delta();
  // Sum over sets of n disjoint unordered pairs, sign (-1)^n, pairs
  // contribute gamma(|k_i - k_j|), unpaired slots contribute Z_{k_i}.
  // Enumerate by bitmask matchings (q <= 3 keeps this tiny, but the code is
  // generic in q).
  const int n = q;
  std::vector<int> idx(n);
  double total = 0.0;
  // recursive matcher over the lowest unassigned index
  struct Rec {
    const std::vector<long>& k;
    const FarimaSequence& z;
    double d;
    double operator()(unsigned used, int sign_n, double pairprod) const {
      int first = -1;
      for (int i = 0; i < static_cast<int>(k.size()); ++i)
        if (!(used >> i & 1u)) { first = i; break; }
      if (first < 0) return (sign_n % 2 ? -1.0 : 1.0) * pairprod;
      double acc = 0.0;
      // leave `first` single
      {
        double rest = (*this)(used | (1u << first), sign_n, pairprod);
        acc += rest * z.at(k[first]);
      }
      // or pair it with a later unused slot
      for (int j = first + 1; j < static_cast<int>(k.size()); ++j) {
        if (used >> j & 1u) continue;
        const double g = autocovariance(d, static_cast<std::size_t>(std::labs(k[first] - k[j])));
        acc += (*this)(used | (1u << first) | (1u << j), sign_n + 1, pairprod * g);
      }
      return acc;
    }
  } rec{k, farima, d};
  total = rec(0u, 0, 1.0);
  (void)idx;
  (void)n;
  return total;
}

double sigma_coefficient(const HermiteParams& params, const FarimaSequence& farima,
                         const std::vector<long>& k) {
  const double d = params.delta();
  switch (params.q) {
    case 1:
      return farima.at(k.at(0));
    case 2: {
      const double z1 = farima.at(k[0]), z2 = farima.at(k[1]);
      return z1 * z2 - autocovariance(d, static_cast<std::size_t>(std::labs(k[0] - k[1])));
    }
    case 3: {
      const double z1 = farima.at(k[0]), z2 = farima.at(k[1]), z3 = farima.at(k[2]);
      const double g12 = autocovariance(d, static_cast<std::size_t>(std::labs(k[0] - k[1])));
      const double g13 = autocovariance(d, static_cast<std::size_t>(std::labs(k[0] - k[2])));
      const double g23 = autocovariance(d, static_cast<std::size_t>(std::labs(k[1] - k[2])));
      return z1 * z2 * z3 - g12 * z3 - g13 * z2 - g23 * z1;
    }
    default:
      return sigma_coefficient_generic(params, farima, k);
  }
}

namespace {

// Enumerate sorted (q-1)-tuples with entries in [lo, m]; the full tuple is
// that multiset plus {m} (so the maximum is m and all pairwise gaps <= m-lo).
template <typename F>
void for_each_companion(int q, long lo, long m, F&& fn) {
  if (q == 1) {
    fn(std::vector<long>{});
    return;
  }
  if (q == 2) {
    for (long v = lo; v <= m; ++v) fn(std::vector<long>{v});
    return;
  }
  for (long v1 = lo; v1 <= m; ++v1)
    for (long v2 = v1; v2 <= m; ++v2) fn(std::vector<long>{v1, v2});
}

double ordered_multiplicity(const std::vector<long>& sorted_tuple) {
  double qfact = 1.0;
  for (std::size_t i = 2; i <= sorted_tuple.size(); ++i) qfact *= static_cast<double>(i);
  double denom = 1.0;
  std::size_t run = 1;
  for (std::size_t i = 1; i < sorted_tuple.size(); ++i) {
    if (sorted_tuple[i] == sorted_tuple[i - 1]) {
      ++run;
      denom *= static_cast<double>(run);
    } else {
      run = 1;
    }
  }
  return qfact / denom;
}

// Contribution of all ordered tuples with maximum entry m (entries >= lo).
double max_entry_contribution(const HermiteParams& params, const WeightTable& weights,
                              const FarimaSequence& farima, long lo, long m) {
  double acc = 0.0;
  for_each_companion(params.q, lo, m, [&](std::vector<long> comp) {
    comp.push_back(m);  // already sorted: companions <= m
    std::vector<int> diffs(comp.size() - 1);
    for (std::size_t i = 1; i < comp.size(); ++i)
      diffs[i - 1] = static_cast<int>(comp[i] - comp[0]);
    const double w = weights.at(diffs);
    const double sig = sigma_coefficient(params, farima, comp);
    acc += ordered_multiplicity(comp) * w * sig;
  });
  return acc;
}

}  // namespace

std::vector<double> partial_sums(const HermiteParams& params, const SimGrid& grid,
                                 const WeightTable& weights, const FarimaSequence& farima) {
  params.validate();
  grid.validate();
  const long m0 = grid.m0(), mmax = grid.m_max();
  const int G = grid.max_diff();
  if (farima.start_index > m0 - G ||
      farima.start_index + static_cast<long>(farima.values.size()) - 1 < mmax)
    throw std::invalid_argument("partial_sums: FARIMA sequence does not cover [m0-G, m_max]");
  const double scale = std::pow(2.0, -grid.J * params.H);
  const int q = params.q;
  const double d = params.delta();

  std::vector<double> gam(static_cast<std::size_t>(G) + 1);
  for (int g = 0; g <= G; ++g) gam[g] = autocovariance(d, static_cast<std::size_t>(g));

  // Interior tuple patterns: sorted companions at offsets in [-G, 0] relative
  // to the maximum entry m, with ordered multiplicity and table weight.
  struct Pattern {
    std::vector<long> offs;  // size q-1, sorted, in [-G, 0]
    double mw;               // multiplicity * weight
  };
  std::vector<Pattern> patterns;
  for_each_companion(q, -static_cast<long>(G), 0, [&](std::vector<long> comp) {
    std::vector<long> tuple(comp);
    tuple.push_back(0);
    std::vector<int> diffs(tuple.size() - 1);
    for (std::size_t i = 1; i < tuple.size(); ++i)
      diffs[i - 1] = static_cast<int>(tuple[i] - tuple[0]);
    patterns.push_back({comp, ordered_multiplicity(tuple) * weights.at(diffs)});
  });

  auto sigma_cached = [&](const std::vector<long>& k) {
    switch (q) {
      case 1:
        return farima.at(k[0]);
      case 2:
        return farima.at(k[0]) * farima.at(k[1]) - gam[std::labs(k[0] - k[1])];
      default: {
        const double z1 = farima.at(k[0]), z2 = farima.at(k[1]), z3 = farima.at(k[2]);
        return z1 * z2 * z3 - gam[std::labs(k[0] - k[1])] * z3 -
               gam[std::labs(k[0] - k[2])] * z2 - gam[std::labs(k[1] - k[2])] * z1;
      }
    }
  };

  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(mmax - m0 + 1));
  double acc = 0.0;
  std::vector<long> k(static_cast<std::size_t>(q));
  for (long m = m0; m <= mmax; ++m) {
    if (m - G >= m0) {
      for (const Pattern& pat : patterns) {
        for (std::size_t i = 0; i < pat.offs.size(); ++i) k[i] = m + pat.offs[i];
        k[static_cast<std::size_t>(q) - 1] = m;
        acc += pat.mw * sigma_cached(k);
      }
    } else {
      acc += max_entry_contribution(params, weights, farima, std::max(m0, m - G), m);
    }
    out.push_back(scale * acc);
  }
  return out;
}

double partial_sum_bruteforce(const HermiteParams& params, const SimGrid& grid,
                              const WeightTable& weights, const FarimaSequence& farima,
                              long m) {
  const long m0 = grid.m0();
  const int G = grid.max_diff();
  const int q = params.q;
  const double scale = std::pow(2.0, -grid.J * params.H);
  std::vector<long> k(static_cast<std::size_t>(q), m0);
  double acc = 0.0;
  while (true) {
    long kmin = k[0], kmax = k[0];
    for (long v : k) { kmin = std::min(kmin, v); kmax = std::max(kmax, v); }
    if (kmax - kmin <= G) {
      std::vector<long> sorted(k);
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> diffs(sorted.size() - 1);
      for (std::size_t i = 1; i < sorted.size(); ++i)
        diffs[i - 1] = static_cast<int>(sorted[i] - sorted[0]);
      acc += weights.at(diffs) * sigma_coefficient(params, farima, k);
    }
    // odometer over [m0, m]^q
    int pos = 0;
    for (; pos < q; ++pos) {
      if (k[pos] < m) { ++k[pos]; break; }
      k[pos] = m0;
    }
    if (pos == q) break;
  }
  return scale * acc;
}

double HermitePath::eval(double t) const {
  if (t < 0.0 || t > grid.horizon + 1e-12)
    throw std::domain_error("HermitePath::eval: t outside [0, horizon]");
  const long m0 = grid.m0();
  const double t0 = grid.t(m0);
  if (t < t0) return node_values.front() * (t / t0);
  const double pos = (t - t0) * std::pow(2.0, grid.J);
  long idx = static_cast<long>(pos);
  if (idx >= static_cast<long>(node_values.size()) - 1)
    idx = static_cast<long>(node_values.size()) - 2;
  const double frac = pos - static_cast<double>(idx);
  return node_values[idx] + frac * (node_values[idx + 1] - node_values[idx]);
}

HermitePath build_path(const HermiteParams& params, const SimGrid& grid,
                       const WeightTable& weights, std::uint64_t seed, Normalization mode) {
  params.validate();
  grid.validate();
  const long m0 = grid.m0(), mmax = grid.m_max();
  const int G = grid.max_diff();
  FarimaParams fp;
  fp.delta = params.delta();
  fp.length = static_cast<std::size_t>(mmax - (m0 - G) + 1);
  fp.seed = seed;
  FarimaSequence seq = generate(fp);
  seq.start_index = m0 - G;

  HermitePath path;
  path.params = params;
  path.grid = grid;
  path.seed = seed;
  path.node_values = partial_sums(params, grid, weights, seq);
  const double c = normalization_factor(params, mode);
  if (c != 1.0)
    for (double& v : path.node_values) v *= c;
  return path;
}

}  // namespace hermite
