#include "hermite/meyer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fft_util.hpp"

namespace hermite {

static double nu(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * x * (35.0 - 84.0 * x + 70.0 * x * x - 20.0 * x * x * x);
}

double hat_phi(double xi) {
  const double a = std::fabs(xi);
  const double two3 = 2.0 * M_PI / 3.0;
  if (a <= two3) return 1.0;
  if (a >= 2.0 * two3) return 0.0;
  return std::cos(M_PI / 2.0 * nu(3.0 * a / (2.0 * M_PI) - 1.0));
}

std::complex<double> hat_phi_delta(double xi, double delta) {
  if (xi == 0.0) return {1.0, 0.0};
  const double p = hat_phi(xi);
  if (p == 0.0) return {0.0, 0.0};
  // base = (1 - e^{-i xi}) / (i xi); stays in the right half-plane for
  // |xi| < 4pi/3, so the principal power is unambiguous.
  const std::complex<double> i(0.0, 1.0);
  const std::complex<double> base = (1.0 - std::exp(-i * xi)) / (i * xi);
  return std::pow(base, delta) * p;
}

double MeyerProfile::integral() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * ds;
}

MeyerProfile build_profile(double delta, double spatial_halfwidth, double ds) {
  if (!(M_PI / ds > 4.0 * M_PI / 3.0))
    throw std::invalid_argument("build_profile: ds too coarse for the Fourier support");
  const double S = spatial_halfwidth;
  const std::size_t n = static_cast<std::size_t>(std::llround(2.0 * S / ds));
  if ((n & (n - 1)) != 0)
    throw std::invalid_argument("build_profile: 2S/ds must be a power of two");

  // Sample hat Phi on the DFT frequency grid and synthesize
  // Phi(s_j) = (1/2pi) int hat(xi) e^{i xi s_j} d xi with s_j = -S + j ds.
  const double dxi = 2.0 * M_PI / (static_cast<double>(n) * ds);
  std::vector<std::complex<double>> spec(n);
  for (std::size_t j = 0; j < n; ++j) {
    // FFT frequency ordering: j -> j for j < n/2, j - n otherwise.
    const double fj = (j < n / 2) ? static_cast<double>(j)
                                  : static_cast<double>(j) - static_cast<double>(n);
    const double xi = fj * dxi;
    // phase shift e^{-i xi S} recenters the output grid at -S
    const std::complex<double> i(0.0, 1.0);
    spec[j] = hat_phi_delta(xi, delta) * std::exp(-i * xi * S);
  }
  auto vals = fft::ifft(spec);  // scaled 1/n
  MeyerProfile out;
  out.delta = delta;
  out.S = S;
  out.ds = ds;
  out.s.resize(n);
  out.values.resize(n);
  const double scale = static_cast<double>(n) * dxi / (2.0 * M_PI);  // riemann sum / ifft norm
  for (std::size_t j = 0; j < n; ++j) {
    out.s[j] = -S + static_cast<double>(j) * ds;
    out.values[j] = vals[j].real() * scale;
  }
  return out;
}

double weight_integral(const MeyerProfile& profile, const std::vector<int>& shifts) {
  const std::size_t n = profile.values.size();
  const long cells_per_unit = std::lround(1.0 / profile.ds);
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double prod = 1.0;
    for (int k : shifts) {
      const long idx = static_cast<long>(j) - k * cells_per_unit;
      if (idx < 0 || idx >= static_cast<long>(n)) { prod = 0.0; break; }
      prod *= profile.values[static_cast<std::size_t>(idx)];
    }
    sum += prod;
  }
  return sum * profile.ds;
}

double WeightTable::at(std::vector<int> diffs) const {
  std::sort(diffs.begin(), diffs.end());
  auto it = entries.find(diffs);
  if (it == entries.end()) throw std::out_of_range("WeightTable: difference vector not tabulated");
  return it->second;
}

static void enumerate_sorted(int q, int max_diff, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == q - 1) {
    out.push_back(cur);
    return;
  }
  const int lo = cur.empty() ? 0 : cur.back();
  for (int d = lo; d <= max_diff; ++d) {
    cur.push_back(d);
    enumerate_sorted(q, max_diff, cur, out);
    cur.pop_back();
  }
}

WeightTable build_weight_table(const MeyerProfile& profile, int q, int max_diff) {
  if (q < 1 || q > 3) throw std::invalid_argument("build_weight_table: q must be 1, 2 or 3");
  WeightTable table;
  table.q = q;
  table.delta = profile.delta;
  table.max_diff = max_diff;
  if (q == 1) {
    table.entries[{}] = 1.0;  // int Phi = hat Phi(0) = 1
    return table;
  }
  std::vector<std::vector<int>> diffs;
  std::vector<int> cur;
  enumerate_sorted(q, max_diff, cur, diffs);
  for (const auto& d : diffs) {
    std::vector<int> shifts(1, 0);
    shifts.insert(shifts.end(), d.begin(), d.end());
    table.entries[d] = weight_integral(profile, shifts);
  }
  return table;
}

double pair_weight_parseval(double delta, int k, double dxi) {
  // (1/2pi) int |hat Phi|^2 cos(k xi) d xi over the compact support
  const double lim = 4.0 * M_PI / 3.0;
  const std::size_t n = static_cast<std::size_t>(std::ceil(2.0 * lim / dxi));
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double xi = -lim + (static_cast<double>(j) + 0.5) * (2.0 * lim / n);
    const double m = std::abs(hat_phi_delta(xi, delta));
    sum += m * m * std::cos(k * xi);
  }
  return sum * (2.0 * lim / n) / (2.0 * M_PI);
}

void save_weight_table(const WeightTable& table, double ds, double S,
                       const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("save_weight_table: cannot open " + path);
  f.precision(17);
  f << "# hermite weight table v1\n";
  f << "# delta=" << table.delta << " q=" << table.q << " ds=" << ds << " S=" << S
    << " max_diff=" << table.max_diff << "\n";
  f << "diffs,weight\n";
  for (const auto& [d, w] : table.entries) {
    for (std::size_t i = 0; i < d.size(); ++i) f << (i ? "|" : "") << d[i];
    f << "," << w << "\n";
  }
}

WeightTable load_weight_table(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("load_weight_table: cannot open " + path);
  WeightTable table;
  std::string line;
  std::getline(f, line);  // banner
  std::getline(f, line);  // params
  {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      auto eq = tok.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = tok.substr(0, eq);
      const std::string val = tok.substr(eq + 1);
      if (key == "delta") table.delta = std::stod(val);
      else if (key == "q") table.q = std::stoi(val);
      else if (key == "max_diff") table.max_diff = std::stoi(val);
    }
  }
  std::getline(f, line);  // header
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto comma = line.rfind(',');
    std::vector<int> d;
    std::string diffs = line.substr(0, comma);
    if (!diffs.empty()) {
      std::istringstream ss(diffs);
      std::string part;
      while (std::getline(ss, part, '|')) d.push_back(std::stoi(part));
    }
    table.entries[d] = std::stod(line.substr(comma + 1));
  }
  return table;
}

}  // namespace hermite
