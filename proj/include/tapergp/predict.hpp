#ifndef TAPERGP_PREDICT_HPP
#define TAPERGP_PREDICT_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tapergp/covmodel.hpp"
#include "tapergp/geometry.hpp"
#include "tapergp/sparse.hpp"
#include "tapergp/taper.hpp"
#include "tapergp/types.hpp"

namespace tapergp {

enum class KrigingMode { untapered, tapered };

// Simple-kriging system for predicting component `target` at new sites. The
// tapered mode factorizes K_theta and builds cross vectors
// k_theta(x)_i = c_1k(x - x_a) t_1k((x - x_a)/gamma); untapered uses
// Sigma_theta and sigma_theta(x). Immutable after construction; concurrent
// predictions on a shared system are safe.
struct KrigingSystem {
  KrigingMode mode;
  LocationSet locs;
  MultiMaternParams params;
  std::optional<TaperSpec> taper;
  int target = 0;
  std::shared_ptr<const DenseCholesky> dense_factor;
  std::shared_ptr<const CholeskyFactor> sparse_factor;

  VectorXd cross_vector(const Eigen::RowVectorXd& x) const;
  VectorXd weights(const Eigen::RowVectorXd& x) const;
  // M^{-1} z; cache this when predicting many sites from one data vector.
  VectorXd solve_data(const VectorXd& z) const;
};

KrigingSystem make_kriging_system(const MultiMaternParams& params, const LocationSet& locs,
                                  const std::optional<TaperSpec>& taper = std::nullopt,
                                  int target = 0, int dense_cap = kDefaultDenseCap);

double predict_at(const Eigen::RowVectorXd& x, const KrigingSystem& sys, const VectorXd& z);

// Dense Sigma_theta0 shared between exact_mspe evaluations.
struct MspeContext {
  MultiMaternParams truth;
  MatrixXd sigma0;
  const LocationSet* locs;
};

MspeContext make_mspe_context(const MultiMaternParams& truth, const LocationSet& locs,
                              int dense_cap = kDefaultDenseCap);

// Deterministic MSPE of the linear predictor built from `sys`, under the true
// model:  c_tt(0; theta0) - 2 w' sigma0(x) + w' Sigma0 w.
double exact_mspe(const Eigen::RowVectorXd& x, const KrigingSystem& sys, const MspeContext& ctx);
double exact_mspe(const Eigen::RowVectorXd& x, const KrigingSystem& sys,
                  const MultiMaternParams& truth, int dense_cap = kDefaultDenseCap);

struct PredictionReport {
  Eigen::RowVectorXd site;
  double value = 0.0;
  std::optional<double> exact_mspe;
  int neighbors_in_range = 0;
};

struct MspeCurvePoint {
  double gamma;
  double mspe_tapered;
  double mspe_untapered;
  double ratio;
  int neighbors_in_range;
};

struct MspeScenario {
  MultiMaternParams weights_params;  // theta used to build the systems
  MultiMaternParams truth;           // theta0 for the MSPE algebra
  LocationSet locs;
  TaperFamily family = TaperFamily::wendland1;
  Eigen::RowVectorXd site;           // prediction location
  int target = 0;
  int dense_cap = kDefaultDenseCap;
};

// ratio(gamma) = mspe(tapered, gamma) / mspe(untapered), plus the neighbor
// count at the prediction site. Deterministic given the location set.
std::vector<MspeCurvePoint> mspe_ratio_curve(const std::vector<double>& gammas,
                                             const MspeScenario& scenario);

struct SqerrDifference {
  double estimate;     // | mean of e_u^2 - e_t^2 |
  double mean_signed;  // mean of e_u^2 - e_t^2
  double std_error;    // sd / sqrt(n_mc)
  int n_sites;
};

// Monte Carlo difference of squared prediction errors over common sites.
// truth[j] holds the target-component field value at sites.row(j).
SqerrDifference integrated_sqerr_difference(const MatrixXd& sites, const VectorXd& truth,
                                            const KrigingSystem& sys_untapered,
                                            const KrigingSystem& sys_tapered,
                                            const VectorXd& z);

// n_mc points uniform over the rectangle [lo, hi]^d, one row per site.
MatrixXd draw_uniform_sites(const Eigen::RowVectorXd& lo, const Eigen::RowVectorXd& hi,
                            int n_mc, std::uint64_t seed);

}  // namespace tapergp

#endif
