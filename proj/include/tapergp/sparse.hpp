#ifndef TAPERGP_SPARSE_HPP
#define TAPERGP_SPARSE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "tapergp/covmodel.hpp"
#include "tapergp/geometry.hpp"
#include "tapergp/taper.hpp"
#include "tapergp/types.hpp"

namespace tapergp {

using SparseMat = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using Permutation = Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int>;

// Symmetric N x N matrix (N = n*p), lower triangle stored in compressed
// column form. Stacked index i = k*n + a for component k and site a
// (0-based). Pattern holds (i,j) only when the site pair is inside the taper
// support; the diagonal is always present.
struct SparseSymMatrix {
  int n = 0;
  int p = 0;
  SparseMat lower;

  int order() const { return static_cast<int>(lower.rows()); }
  std::int64_t nonzeros() const { return lower.nonZeros(); }
};

struct AssemblyOptions {
  std::int64_t max_nnz = 200'000'000;  // stored lower-triangle entries
};

// K_theta = Sigma_theta (Schur) T over the pairs with ||x_a - x_b|| < gamma.
// Neighbor pairs come from a uniform cell index, never a dense N^2 scan.
// Refuses gamma = inf (use the dense path).
SparseSymMatrix assemble_tapered(const MultiMaternParams& params, const LocationSet& locs,
                                 const TaperSpec& spec, const AssemblyOptions& opts = {});

// Dense Sigma_theta, optionally Schur-multiplied by a taper. Reference path
// for gamma = inf and for tests; refuses N > dense_cap.
MatrixXd assemble_dense(const MultiMaternParams& params, const LocationSet& locs,
                        const TaperSpec* spec = nullptr, int dense_cap = kDefaultDenseCap);

enum class OrderingKind { amd, natural };

// Reusable symbolic analysis: fill-reducing permutation, elimination tree and
// factor pattern. Valid for any matrix with the same pattern.
struct SymbolicFactor {
  Permutation perm;               // P K P^T = L L^T
  std::vector<int> parent;        // elimination tree on the permuted matrix
  std::vector<int> col_ptr;       // column pointers of L (size N+1)
  std::int64_t flops_estimate;    // sum over columns of nnz(L_col)^2
};

struct CholeskyFactor {
  std::shared_ptr<const SymbolicFactor> symbolic;
  SparseMat L;      // lower triangular, permuted order
  double logdet;    // 2 * sum log diag(L)

  VectorXd solve(const VectorXd& rhs) const;
  MatrixXd solve(const MatrixXd& rhs) const;
  std::int64_t flops_estimate() const { return symbolic->flops_estimate; }
  const Permutation& permutation() const { return symbolic->perm; }
};

// Fill-reducing ordering (approximate minimum degree; deterministic), then
// symbolic and up-looking numeric factorization. A nonpositive pivot throws
// NotPositiveDefinite carrying the offending unpermuted column.
CholeskyFactor factorize(const SparseSymMatrix& matrix,
                         OrderingKind ordering = OrderingKind::amd);

// Numeric-only refactorization for a matrix sharing the symbolic's pattern.
CholeskyFactor factorize(const SparseSymMatrix& matrix,
                         std::shared_ptr<const SymbolicFactor> symbolic);

std::shared_ptr<const SymbolicFactor> analyze(const SparseSymMatrix& matrix,
                                              OrderingKind ordering = OrderingKind::amd);

VectorXd solve(const CholeskyFactor& factor, const VectorXd& rhs);

// Gershgorin bound max_i sum_j |a_ij| >= lambda_1.
double spectral_bound(const SparseSymMatrix& matrix);
double spectral_bound(const MatrixXd& matrix);

// MatrixMarket coordinate format, symmetric lower triangle, 1-based.
void write_matrix_market(const SparseSymMatrix& matrix, const std::string& path);

// Dense reference factorization with the same surface as CholeskyFactor.
struct DenseCholesky {
  Eigen::LLT<MatrixXd> llt;
  double logdet;

  VectorXd solve(const VectorXd& rhs) const { return llt.solve(rhs); }
  MatrixXd solve(const MatrixXd& rhs) const { return llt.solve(rhs); }
};

DenseCholesky factorize_dense(const MatrixXd& matrix);

}  // namespace tapergp

#endif
