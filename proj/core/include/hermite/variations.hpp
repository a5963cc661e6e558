#pragma once

#include <functional>
#include <string>
#include <vector>

namespace hermite {

struct VariationConfig {
  int N = 17;
  double gamma = 0.95;
  int p = 2;

  long Lexp() const;  // floor(N^gamma)
  long L() const;     // 2^{floor(N^gamma)}
  void validate() const;
};

// Deterministic weight h with declared Holder exponent.
struct WeightFn {
  enum class Kind { identity, cube, exp, sqrt, constant, custom };
  Kind kind = Kind::identity;
  double const_value = 1.0;
  std::function<double(double)> custom;
  double holder_alpha = 1.0;

  double operator()(double s) const;
  static WeightFn parse(const std::string& name);  // "identity", "cube", ...
  std::string name() const;
};

// Special increments Delta_l = Z(l/L + 2^{-N}) - Z(l/L), l = 1..L.
std::vector<double> special_increments(const std::function<double(double)>& path_eval,
                                       const VariationConfig& cfg);

// S_{N,p} = 2^{pHN}/L * sum (Delta_l)^p  (signed powers).
double modified_power_variation(const std::vector<double>& incs, const VariationConfig& cfg,
                                double H);

// V_{N,p} = sqrt(L) (S - mu_p).
double centered_stat(double S_value, const VariationConfig& cfg, double mu_p);

// U_{N,p} = 2^{pHN}/sqrt(L) * sum h(l/L) ((Delta_l)^p - 2^{-pHN} mu_p).
double weighted_variation(const std::vector<double>& incs, const VariationConfig& cfg,
                          double H, const WeightFn& h, double mu_p);

struct MomentTable {
  int q = 1;
  int p = 2;
  double mu_p = 0.0;
  double m_p = 0.0;
  bool closed_form = true;
  double mu_std_err = 0.0;  // Monte Carlo std error when !closed_form
};

// q=1: Gaussian closed forms; q>1: mu_2 = 1 closed form, other p by Monte
// Carlo over mc_samples values of Z_1 supplied by the caller.
MomentTable moment_table(int q, int p, const std::vector<double>& z1_samples = {});

double gaussian_moment(int p);  // E N(0,1)^p: 0 odd, (p-1)!! even

}  // namespace hermite
