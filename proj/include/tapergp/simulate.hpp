#ifndef TAPERGP_SIMULATE_HPP
#define TAPERGP_SIMULATE_HPP

#include <cstdint>

#include "tapergp/covmodel.hpp"
#include "tapergp/geometry.hpp"
#include "tapergp/types.hpp"

namespace tapergp {

// Exact joint simulation plan: the field is drawn at the observation sites
// plus extra_sites (e.g. prediction locations) under params via one dense
// Cholesky of the joint covariance. Replication r consumes the generator
// stream derived from (seed, r), so any subset of replications reproduces
// independently of the others and of the thread count.
struct SimulationPlan {
  MultiMaternParams params;
  LocationSet locs;
  MatrixXd extra_sites;  // n_extra x d, may have zero rows
  int n_rep = 1;
  std::uint64_t seed = 0;
  int dense_cap = kDefaultDenseCap;
};

// Joint site list: observation sites first, then extra sites. Throws
// ParameterError on duplicates.
LocationSet joint_locations(const SimulationPlan& plan);

// One column per replication, length (n + n_extra) * p, stacked i = k*n + a
// over the joint site list.
MatrixXd simulate_field(const SimulationPlan& plan);

// Splits a joint stacked vector into the observation part (length n*p,
// stacked over the first n sites) and the extra part (n_extra x p).
void split_joint(const VectorXd& joint, int n, int n_extra, int p,
                 VectorXd& obs, MatrixXd& extra);

}  // namespace tapergp

#endif
