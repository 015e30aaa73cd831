#ifndef TAPERGP_COVMODEL_HPP
#define TAPERGP_COVMODEL_HPP

#include <cmath>
#include <string>
#include <vector>

#include "tapergp/geometry.hpp"
#include "tapergp/types.hpp"

namespace tapergp {

// Isotropic Matern kernel
//   sig^2 * 2^(1-nu)/Gamma(nu) * (r/rho)^nu * K_nu(r/rho),
// continued by its limit sig^2 at r = 0. Half-integer nu uses the closed
// forms; other nu goes through std::cyl_bessel_k.
template <class T>
T matern_kernel(T r, T sig, T rho, T nu) {
  if (r < T(0) || !(rho > T(0)) || !(nu > T(0)))
    throw ParameterError("matern_kernel: need r >= 0, rho > 0, nu > 0");
  const T s2 = sig * sig;
  if (r == T(0)) return s2;
  const T u = r / rho;
  if (nu == T(0.5)) return s2 * std::exp(-u);
  if (nu == T(1.5)) return s2 * (T(1) + u) * std::exp(-u);
  if (nu == T(2.5)) return s2 * (T(1) + u + u * u / T(3)) * std::exp(-u);
  using std::lgamma;
  const T lk = std::log(std::cyl_bessel_k(nu, u));
  return s2 * std::exp((T(1) - nu) * std::log(T(2)) - lgamma(nu) + nu * std::log(u) + lk);
}

// Parameter vector of a p-variate Matern family: symmetric p x p matrices of
// ranges rho_kl > 0, sills sigma_kl (sigma_kk > 0) and smoothness nu_kl > 0.
// The covariance uses sigma_kl squared; nu is never estimated.
struct MultiMaternParams {
  MatrixXd rho, sill, nu;

  int p() const { return static_cast<int>(rho.rows()); }
  void validate() const;  // throws ParameterError
};

double matern_cov(double dist, int k, int l, const MultiMaternParams& params);
double matern_cov(const VectorXd& lag, int k, int l, const MultiMaternParams& params);

// Box for the free parameters, [lower_i, upper_i] per coordinate. Names use
// the config spelling ("rho.12", "sigma.11"); indices are 1-based and k <= l.
struct ParamBox {
  std::vector<std::string> free_names;
  VectorXd lower, upper;

  int q() const { return static_cast<int>(free_names.size()); }
  void validate() const;
  bool contains(const VectorXd& theta) const;
  VectorXd project(VectorXd theta) const;

  // Ranges [0.1, 50], diagonal sills [0.01, 10], cross sills [-5, 5],
  // ordered (rho.11, rho.12, ..., sigma.11, ...) over the upper triangle.
  static ParamBox defaults(int p);
};

VectorXd pack(const MultiMaternParams& params, const ParamBox& box);
MultiMaternParams unpack(const VectorXd& theta, const ParamBox& box,
                         const MultiMaternParams& fixed, bool strict = false);

struct ModelConfig {
  int d = 2;
  MultiMaternParams params_true;
  ParamBox box;

  int p() const { return params_true.p(); }
  void validate() const;  // theta0 must be strictly interior to the box
};

// Bivariate presets "A" (exponential) and "B" (mixed smoothness).
ModelConfig preset_model(const std::string& name);

struct ValidityReport {
  bool valid;
  double min_eigenvalue;
};

// Assembles the dense np x np covariance at `params` over `locs` and reports
// its smallest eigenvalue; valid iff min_eigenvalue >= tol.
ValidityReport check_validity(const MultiMaternParams& params, const LocationSet& locs,
                              double tol, int dense_cap = kDefaultDenseCap);

// Flat key-value serialization ("rho.11", "sigma.12", "nu.22", ...).
std::vector<std::pair<std::string, double>> params_to_entries(const MultiMaternParams& params);
void apply_entry(MultiMaternParams& params, const std::string& key, double value);

}  // namespace tapergp

#endif
