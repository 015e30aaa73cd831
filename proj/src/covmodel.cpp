#include "tapergp/covmodel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tapergp {

namespace {

void require_symmetric(const MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || !m.isApprox(m.transpose()))
    throw ParameterError(std::string("MultiMaternParams: ") + what + " must be symmetric");
}

// "rho.12" -> (kind, k, l) with 0-based k <= l. Indices are single digits.
struct ParamName {
  enum Kind { rho, sigma, nu } kind;
  int k, l;
};

ParamName parse_param_name(const std::string& name) {
  auto dot = name.find('.');
  if (dot == std::string::npos || name.size() != dot + 3)
    throw ParameterError("bad parameter name: " + name);
  std::string head = name.substr(0, dot);
  ParamName out;
  if (head == "rho") out.kind = ParamName::rho;
  else if (head == "sigma") out.kind = ParamName::sigma;
  else if (head == "nu") out.kind = ParamName::nu;
  else throw ParameterError("bad parameter name: " + name);
  char ck = name[dot + 1], cl = name[dot + 2];
  if (!std::isdigit(ck) || !std::isdigit(cl))
    throw ParameterError("bad parameter name: " + name);
  out.k = ck - '1';
  out.l = cl - '1';
  if (out.k < 0 || out.l < 0 || out.k > out.l)
    throw ParameterError("bad parameter name (need 1-based k <= l): " + name);
  return out;
}

}  // namespace

void MultiMaternParams::validate() const {
  require_symmetric(rho, "rho");
  require_symmetric(sill, "sill");
  require_symmetric(nu, "nu");
  const int pp = p();
  if (sill.rows() != pp || nu.rows() != pp)
    throw ParameterError("MultiMaternParams: inconsistent sizes");
  for (int k = 0; k < pp; ++k) {
    if (!(sill(k, k) > 0)) throw ParameterError("MultiMaternParams: sigma_kk > 0 required");
    for (int l = 0; l < pp; ++l) {
      if (!(rho(k, l) > 0)) throw ParameterError("MultiMaternParams: rho_kl > 0 required");
      if (!(nu(k, l) > 0)) throw ParameterError("MultiMaternParams: nu_kl > 0 required");
    }
  }
}

double matern_cov(double dist, int k, int l, const MultiMaternParams& params) {
  return matern_kernel(dist, params.sill(k, l), params.rho(k, l), params.nu(k, l));
}

double matern_cov(const VectorXd& lag, int k, int l, const MultiMaternParams& params) {
  if (!lag.allFinite()) throw ParameterError("matern_cov: non-finite lag");
  return matern_cov(lag.norm(), k, l, params);
}

void ParamBox::validate() const {
  const int n = q();
  if (n < 1) throw ParameterError("ParamBox: q >= 1 required");
  if (lower.size() != n || upper.size() != n)
    throw ParameterError("ParamBox: bound sizes must match free_names");
  for (int i = 0; i < n; ++i) {
    if (!(lower[i] < upper[i])) throw ParameterError("ParamBox: lower < upper required");
    parse_param_name(free_names[i]);
  }
}

bool ParamBox::contains(const VectorXd& theta) const {
  if (theta.size() != q()) return false;
  return (theta.array() >= lower.array()).all() && (theta.array() <= upper.array()).all();
}

VectorXd ParamBox::project(VectorXd theta) const {
  if (theta.size() != q()) throw ParameterError("ParamBox::project: wrong length");
  return theta.cwiseMax(lower).cwiseMin(upper);
}

ParamBox ParamBox::defaults(int p) {
  ParamBox box;
  std::vector<double> lo, hi;
  for (int k = 0; k < p; ++k)
    for (int l = k; l < p; ++l) {
      std::ostringstream name;
      name << "rho." << (k + 1) << (l + 1);
      box.free_names.push_back(name.str());
      lo.push_back(0.1);
      hi.push_back(50.0);
    }
  for (int k = 0; k < p; ++k)
    for (int l = k; l < p; ++l) {
      std::ostringstream name;
      name << "sigma." << (k + 1) << (l + 1);
      box.free_names.push_back(name.str());
      lo.push_back(k == l ? 0.01 : -5.0);
      hi.push_back(k == l ? 10.0 : 5.0);
    }
  box.lower = Eigen::Map<VectorXd>(lo.data(), static_cast<Index>(lo.size()));
  box.upper = Eigen::Map<VectorXd>(hi.data(), static_cast<Index>(hi.size()));
  return box;
}

VectorXd pack(const MultiMaternParams& params, const ParamBox& box) {
  VectorXd theta(box.q());
  for (int i = 0; i < box.q(); ++i) {
    ParamName nm = parse_param_name(box.free_names[i]);
    const MatrixXd& m = nm.kind == ParamName::rho    ? params.rho
                        : nm.kind == ParamName::sigma ? params.sill
                                                      : params.nu;
    if (nm.k >= params.p() || nm.l >= params.p())
      throw ParameterError("pack: parameter index beyond p");
    theta[i] = m(nm.k, nm.l);
  }
  return theta;
}

MultiMaternParams unpack(const VectorXd& theta, const ParamBox& box,
                         const MultiMaternParams& fixed, bool strict) {
  if (theta.size() != box.q()) throw ParameterError("unpack: wrong theta length");
  if (strict && !box.contains(theta)) throw ParameterError("unpack: theta outside box");
  MultiMaternParams out = fixed;
  for (int i = 0; i < box.q(); ++i) {
    ParamName nm = parse_param_name(box.free_names[i]);
    MatrixXd& m = nm.kind == ParamName::rho    ? out.rho
                  : nm.kind == ParamName::sigma ? out.sill
                                                : out.nu;
    if (nm.k >= out.p() || nm.l >= out.p())
      throw ParameterError("unpack: parameter index beyond p");
    m(nm.k, nm.l) = theta[i];
    m(nm.l, nm.k) = theta[i];
  }
  return out;
}

void ModelConfig::validate() const {
  params_true.validate();
  box.validate();
  VectorXd theta0 = pack(params_true, box);
  for (int i = 0; i < box.q(); ++i)
    if (!(box.lower[i] < theta0[i] && theta0[i] < box.upper[i]))
      throw ParameterError("ModelConfig: theta0 must be strictly interior to the box");
}

ModelConfig preset_model(const std::string& name) {
  ModelConfig cfg;
  cfg.d = 2;
  MultiMaternParams& p = cfg.params_true;
  p.rho.resize(2, 2);
  p.sill.resize(2, 2);
  p.nu.resize(2, 2);
  if (name == "A" || name == "a") {
    p.rho << 5, 3, 3, 4;
    p.sill << 1, 0.6, 0.6, 1;
    p.nu << 0.5, 0.5, 0.5, 0.5;
  } else if (name == "B" || name == "b") {
    p.rho << 3, 3, 3, 4;
    p.sill << 1, 0.7, 0.7, 1;
    p.nu << 1.5, 1.0, 1.0, 0.5;
  } else {
    throw ParameterError("preset_model: unknown model '" + name + "'");
  }
  cfg.box = ParamBox::defaults(2);
  cfg.validate();
  return cfg;
}

ValidityReport check_validity(const MultiMaternParams& params, const LocationSet& locs,
                              double tol, int dense_cap) {
  params.validate();
  const Index n = locs.size();
  const Index p = params.p();
  const Index N = n * p;
  if (N > dense_cap)
    throw SizeError("check_validity: dense matrix exceeds cap", N * N);
  MatrixXd sigma(N, N);
  for (int k = 0; k < p; ++k)
    for (int l = 0; l <= k; ++l) {
      for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
          double r = (locs.points.row(a) - locs.points.row(b)).norm();
          sigma(k * n + a, l * n + b) = matern_cov(r, k, l, params);
        }
      if (l != k)
        sigma.block(l * n, k * n, n, n) = sigma.block(k * n, l * n, n, n).transpose();
    }
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(sigma, Eigen::EigenvaluesOnly);
  double lam_min = es.eigenvalues().minCoeff();
  return {lam_min >= tol, lam_min};
}

std::vector<std::pair<std::string, double>> params_to_entries(const MultiMaternParams& params) {
  std::vector<std::pair<std::string, double>> out;
  const int p = params.p();
  auto emit = [&](const char* head, const MatrixXd& m) {
    for (int k = 0; k < p; ++k)
      for (int l = k; l < p; ++l) {
        std::ostringstream key;
        key << head << "." << (k + 1) << (l + 1);
        out.emplace_back(key.str(), m(k, l));
      }
  };
  emit("rho", params.rho);
  emit("sigma", params.sill);
  emit("nu", params.nu);
  return out;
}

void apply_entry(MultiMaternParams& params, const std::string& key, double value) {
  ParamName nm = parse_param_name(key);
  MatrixXd& m = nm.kind == ParamName::rho    ? params.rho
                : nm.kind == ParamName::sigma ? params.sill
                                              : params.nu;
  if (nm.k >= params.p() || nm.l >= params.p())
    throw ParameterError("apply_entry: index beyond p: " + key);
  m(nm.k, nm.l) = value;
  m(nm.l, nm.k) = value;
}

}  // namespace tapergp
