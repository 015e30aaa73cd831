#ifndef TAPERGP_LIKELIHOOD_HPP
#define TAPERGP_LIKELIHOOD_HPP

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "tapergp/covmodel.hpp"
#include "tapergp/geometry.hpp"
#include "tapergp/sparse.hpp"
#include "tapergp/taper.hpp"
#include "tapergp/types.hpp"

namespace tapergp {

enum class ObjectiveKind { untapered, one_taper };

// Negative log-likelihood objective over the free parameters, normalized by
// 1/np:  L = (log det M + z' M^{-1} z) / (n p)  with M = Sigma (untapered)
// or M = Sigma (Schur) T (one-taper, sparse path). A one-taper objective with
// gamma = inf evaluates through the dense path and equals the untapered one.
// Invalid theta (factorization failure) evaluates to +inf.
class Objective {
 public:
  Objective(ObjectiveKind kind, LocationSet locs, VectorXd data,
            MultiMaternParams params_template, ParamBox box,
            std::optional<TaperSpec> taper = std::nullopt,
            int dense_cap = kDefaultDenseCap);

  double operator()(const VectorXd& theta) const;

  ObjectiveKind kind() const { return kind_; }
  const LocationSet& locations() const { return locs_; }
  const VectorXd& data() const { return data_; }
  const ParamBox& box() const { return box_; }
  const MultiMaternParams& params_template() const { return template_; }
  const std::optional<TaperSpec>& taper() const { return taper_; }
  long eval_count() const { return evals_; }

 private:
  bool dense_path() const;
  void ensure_workspace() const;

  ObjectiveKind kind_;
  LocationSet locs_;
  VectorXd data_;
  MultiMaternParams template_;
  ParamBox box_;
  std::optional<TaperSpec> taper_;
  int dense_cap_;
  mutable long evals_ = 0;

  struct Workspace;
  mutable std::shared_ptr<Workspace> ws_;
};

struct FitOptions {
  int max_evals = 2000;
  double diam_tol = 1e-6;    // simplex diameter on the theta scale
  double fval_tol = 1e-8;    // best-to-worst value change
  double init_step_rel = 0.05;  // initial simplex step, fraction of box width
  bool keep_trace = false;
};

struct FitResult {
  VectorXd theta_hat;
  double objective_value = kInf;
  long evaluations = 0;
  bool converged = false;
  double gamma = kInf;  // taper range this fit used (inf = untapered)
  std::vector<std::pair<VectorXd, double>> trace;
};

// Derivative-free bounded minimization (Nelder-Mead with projection onto the
// box). Returns the best point seen even when the budget runs out.
FitResult minimize_box(const std::function<double(const VectorXd&)>& f,
                       const VectorXd& start, const ParamBox& box,
                       const FitOptions& opts = {});

FitResult fit_ml(const Objective& obj, const VectorXd& start, const ParamBox& box,
                 const FitOptions& opts = {});

// Sequential fits over strictly descending taper ranges (first may be inf),
// warm-starting each from the previous optimum.
std::vector<FitResult> fit_with_continuation(
    const LocationSet& locs, const VectorXd& data, const MultiMaternParams& params_template,
    const ParamBox& box, TaperFamily family, const std::vector<double>& gammas,
    const VectorXd& start, const FitOptions& opts = {});

// Cartesian lattice with points_per_axis values per free coordinate, spanning
// +-rel around theta0 and clipped to the box.
std::vector<VectorXd> make_theta_lattice(const VectorXd& theta0, const ParamBox& box,
                                         double rel = 0.2, int points_per_axis = 3);

// theta0 plus +-rel single-coordinate displacements (2q + 1 points).
std::vector<VectorXd> make_theta_axis_grid(const VectorXd& theta0, const ParamBox& box,
                                           double rel = 0.2);

// sup over the grid of |L_theta - Lbar_theta| for one data vector.
double likelihood_gap(const std::vector<VectorXd>& grid, const VectorXd& data,
                      const LocationSet& locs, const TaperSpec& taper,
                      const MultiMaternParams& params_template, const ParamBox& box,
                      int dense_cap = kDefaultDenseCap);

// Same sup for each column of `data`, sharing the per-theta factorizations.
VectorXd likelihood_gap_many(const std::vector<VectorXd>& grid, const MatrixXd& data,
                             const LocationSet& locs, const TaperSpec& taper,
                             const MultiMaternParams& params_template, const ParamBox& box,
                             int dense_cap = kDefaultDenseCap, int threads = 1);

}  // namespace tapergp

#endif
