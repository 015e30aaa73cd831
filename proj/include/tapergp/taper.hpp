#ifndef TAPERGP_TAPER_HPP
#define TAPERGP_TAPER_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "tapergp/types.hpp"

namespace tapergp {

// Unit-support taper kernels, zero exactly for r >= 1.
template <class T>
T wendland1_unit(T r) {
  if (r >= T(1)) return T(0);
  const T s = T(1) - r;
  const T s2 = s * s;
  return s2 * s2 * (T(1) + T(4) * r);
}

template <class T>
T wendland2_unit(T r) {
  if (r >= T(1)) return T(0);
  const T s = T(1) - r;
  const T s3 = s * s * s;
  return s3 * s3 * (T(1) + T(6) * r + T(35) / T(3) * r * r);
}

template <class T>
T spherical_unit(T r) {
  if (r >= T(1)) return T(0);
  const T s = T(1) - r;
  return s * s * (T(1) + r / T(2));
}

enum class TaperFamily { wendland1, wendland2, spherical, multivariate_iv, custom };

TaperFamily taper_family_from_name(const std::string& name);
std::string taper_family_name(TaperFamily family);

// A p x p matrix of compactly supported taper functions with common Euclidean
// support radius gamma. gamma = inf is the "no tapering" sentinel: every
// entry evaluates to 1 and downstream code takes the dense path.
struct TaperSpec {
  int p = 2;
  TaperFamily family = TaperFamily::wendland1;
  double gamma = kInf;
  // Unit-argument entries t_kl(r), row-major k*p + l; only for custom.
  std::vector<std::function<double(double)>> custom;
};

TaperSpec make_taper(TaperFamily family, double gamma, int p = 2);
TaperSpec make_custom_taper(std::vector<std::function<double(double)>> table,
                            double gamma, int p);

// t_kl(h / gamma): `dist` is the unscaled Euclidean lag norm.
double taper_value(double dist, int k, int l, const TaperSpec& spec);
double taper_value(const VectorXd& lag, int k, int l, const TaperSpec& spec);

double support_radius(const TaperSpec& spec);

struct Condition4Report {
  bool holds;
  std::vector<std::pair<int, int>> offending;  // entries with t_kl(0) != 1
};

// Checks t_kl(0) = 1 (within 1e-12) for all k,l and |t_kl| <= 1 on a
// deterministic probe grid over [0, 1].
Condition4Report validate_condition4(const TaperSpec& spec);

}  // namespace tapergp

#endif
