#include "tapergp/sparse.hpp"

#include <Eigen/OrderingMethods>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_map>

namespace tapergp {

namespace {

// Cell key for the uniform grid used by the neighbor scan.
struct CellKey {
  std::vector<std::int32_t> c;
  bool operator==(const CellKey& o) const { return c == o.c; }
};

struct CellKeyHash {
  size_t operator()(const CellKey& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : k.c) {
      h ^= static_cast<std::uint32_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

struct SitePair {
  int a, b;
  double r;
};

// All ordered pairs (a, b) with ||x_a - x_b|| < gamma, including a == b,
// found through a cell grid of width gamma. Expected O(n h) work.
std::vector<SitePair> neighbor_pairs(const LocationSet& locs, double gamma) {
  const int n = locs.size();
  const int d = locs.dim();
  std::unordered_map<CellKey, std::vector<int>, CellKeyHash> cells;
  auto key_of = [&](int a) {
    CellKey k;
    k.c.resize(d);
    for (int j = 0; j < d; ++j)
      k.c[j] = static_cast<std::int32_t>(std::floor(locs.points(a, j) / gamma));
    return k;
  };
  for (int a = 0; a < n; ++a) cells[key_of(a)].push_back(a);

  std::vector<SitePair> pairs;
  const double g2 = gamma * gamma;
  std::vector<int> offsets(d, -1);
  for (int a = 0; a < n; ++a) {
    CellKey base = key_of(a);
    std::fill(offsets.begin(), offsets.end(), -1);
    while (true) {
      CellKey k = base;
      for (int j = 0; j < d; ++j) k.c[j] += offsets[j];
      auto it = cells.find(k);
      if (it != cells.end()) {
        for (int b : it->second) {
          if (b > a) continue;
          double r2 = (locs.points.row(a) - locs.points.row(b)).squaredNorm();
          if (r2 < g2) {
            double r = std::sqrt(r2);
            pairs.push_back({a, b, r});
            if (b != a) pairs.push_back({b, a, r});
          }
        }
      }
      int j = 0;
      for (; j < d; ++j) {
        if (offsets[j] < 1) {
          ++offsets[j];
          break;
        }
        offsets[j] = -1;
      }
      if (j == d) break;
    }
  }
  return pairs;
}

}  // namespace

SparseSymMatrix assemble_tapered(const MultiMaternParams& params, const LocationSet& locs,
                                 const TaperSpec& spec, const AssemblyOptions& opts) {
  params.validate();
  if (std::isinf(spec.gamma))
    throw ParameterError("assemble_tapered: gamma = inf; use the dense path");
  if (spec.p != params.p())
    throw ParameterError("assemble_tapered: taper/params p mismatch");
  const int n = locs.size();
  const int p = params.p();
  const Index N = static_cast<Index>(n) * p;

  auto pairs = neighbor_pairs(locs, spec.gamma);
  std::int64_t n_ordered = static_cast<std::int64_t>(pairs.size());
  std::int64_t n_lower_sites = (n_ordered - n) / 2 + n;  // pairs with a >= b
  std::int64_t est = n_ordered * (static_cast<std::int64_t>(p) * (p - 1) / 2) +
                     n_lower_sites * p;
  if (est > opts.max_nnz)
    throw SizeError("assemble_tapered: estimated nonzeros exceed cap", est);

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(est));
  for (const auto& pr : pairs) {
    for (int k = 0; k < p; ++k)
      for (int l = 0; l <= k; ++l) {
        if (k == l && pr.a < pr.b) continue;  // keep i >= j only
        double v = matern_cov(pr.r, k, l, params) * taper_value(pr.r, k, l, spec);
        trip.emplace_back(k * n + pr.a, l * n + pr.b, v);
      }
  }
  SparseSymMatrix out;
  out.n = n;
  out.p = p;
  out.lower.resize(N, N);
  out.lower.setFromTriplets(trip.begin(), trip.end());
  out.lower.makeCompressed();
  return out;
}

MatrixXd assemble_dense(const MultiMaternParams& params, const LocationSet& locs,
                        const TaperSpec* spec, int dense_cap) {
  params.validate();
  const Index n = locs.size();
  const Index p = params.p();
  const Index N = n * p;
  if (N > dense_cap) throw SizeError("assemble_dense: order exceeds dense cap", N * N);
  if (spec && spec->p != p) throw ParameterError("assemble_dense: taper/params p mismatch");

  MatrixXd dist(n, n);
  for (Index b = 0; b < n; ++b) {
    dist(b, b) = 0.0;
    for (Index a = b + 1; a < n; ++a) {
      double r = (locs.points.row(a) - locs.points.row(b)).norm();
      dist(a, b) = r;
      dist(b, a) = r;
    }
  }
  MatrixXd out(N, N);
  for (int k = 0; k < p; ++k)
    for (int l = 0; l <= k; ++l) {
      for (Index b = 0; b < n; ++b)
        for (Index a = 0; a < n; ++a) {
          double r = dist(a, b);
          double v = matern_cov(r, k, l, params);
          if (spec) v *= taper_value(r, k, l, *spec);
          out(k * n + a, l * n + b) = v;
        }
      if (l != k) out.block(l * n, k * n, n, n) = out.block(k * n, l * n, n, n).transpose();
    }
  return out;
}

std::shared_ptr<const SymbolicFactor> analyze(const SparseSymMatrix& matrix,
                                              OrderingKind ordering) {
  const int N = matrix.order();
  auto sym = std::make_shared<SymbolicFactor>();
  if (ordering == OrderingKind::amd) {
    Permutation pinv;
    Eigen::AMDOrdering<int>()(matrix.lower.selfadjointView<Eigen::Lower>(), pinv);
    sym->perm = pinv.inverse();
  } else {
    sym->perm.setIdentity(N);
  }

  // Upper triangle of P K P^T: column k holds row k of the permuted lower
  // triangle, which is what the up-looking sweep consumes.
  SparseMat upper(N, N);
  upper.selfadjointView<Eigen::Upper>() =
      matrix.lower.selfadjointView<Eigen::Lower>().twistedBy(sym->perm);

  // Elimination tree and column counts in one sweep over the rows.
  std::vector<int>& parent = sym->parent;
  parent.assign(N, -1);
  std::vector<int> flag(N, -1), lnz(N, 0);
  const int* outer = upper.outerIndexPtr();
  const int* inner = upper.innerIndexPtr();
  for (int k = 0; k < N; ++k) {
    flag[k] = k;
    for (int q = outer[k]; q < outer[k + 1]; ++q) {
      int i = inner[q];
      if (i >= k) continue;
      for (; flag[i] != k; i = parent[i]) {
        if (parent[i] == -1) parent[i] = k;
        ++lnz[i];  // L(k, i) is a nonzero of column i
        flag[i] = k;
      }
    }
  }

  sym->col_ptr.assign(N + 1, 0);
  sym->flops_estimate = 0;
  for (int j = 0; j < N; ++j) {
    sym->col_ptr[j + 1] = sym->col_ptr[j] + lnz[j] + 1;  // +1 for the diagonal
    std::int64_t c = lnz[j] + 1;
    sym->flops_estimate += c * c;
  }
  return sym;
}

CholeskyFactor factorize(const SparseSymMatrix& matrix,
                         std::shared_ptr<const SymbolicFactor> symbolic) {
  const int N = matrix.order();
  const SymbolicFactor& sym = *symbolic;
  SparseMat upper(N, N);
  upper.template selfadjointView<Eigen::Upper>() =
      matrix.lower.template selfadjointView<Eigen::Lower>().twistedBy(sym.perm);

  const int* aouter = upper.outerIndexPtr();
  const int* ainner = upper.innerIndexPtr();
  const double* avals = upper.valuePtr();

  const std::vector<int>& parent = sym.parent;
  const std::vector<int>& cp = sym.col_ptr;
  std::vector<int> li(static_cast<size_t>(cp[N]));
  std::vector<double> lx(static_cast<size_t>(cp[N]));
  std::vector<int> fill(N);           // next free slot per column (strict part)
  std::vector<double> diag(N, 0.0);   // D of the LDL' sweep
  std::vector<double> y(N, 0.0);
  std::vector<int> pattern(N), flag(N, -1);
  Permutation perm_inv = sym.perm.inverse();

  for (int j = 0; j < N; ++j) fill[j] = cp[j] + 1;  // slot 0 is the diagonal

  for (int k = 0; k < N; ++k) {
    // Row pattern of L(k, :) via elimination-tree reach, topological order.
    int top = N;
    flag[k] = k;
    double dk = 0.0;
    for (int q = aouter[k]; q < aouter[k + 1]; ++q) {
      int i = ainner[q];
      if (i > k) continue;
      if (i == k) {
        dk = avals[q];
        continue;
      }
      y[i] = avals[q];
      int len = 0;
      for (; flag[i] != k; i = parent[i]) {
        pattern[len++] = i;
        flag[i] = k;
      }
      while (len > 0) pattern[--top] = pattern[--len];
    }
    for (int t = top; t < N; ++t) {
      const int j = pattern[t];
      const double yj = y[j];
      y[j] = 0.0;
      const double lkj = yj / diag[j];
      for (int q = cp[j] + 1; q < fill[j]; ++q) y[li[q]] -= lx[q] * yj;
      dk -= lkj * yj;
      li[fill[j]] = k;
      lx[fill[j]] = lkj;
      ++fill[j];
    }
    if (!(dk > 0.0) || !std::isfinite(dk)) {
      int orig = perm_inv.indices()[k];
      throw NotPositiveDefinite("factorize: nonpositive pivot", orig);
    }
    diag[k] = dk;
    li[cp[k]] = k;
  }

  // Scale the unit-lower LDL' columns into the LL' factor.
  double logdet = 0.0;
  for (int j = 0; j < N; ++j) {
    const double sd = std::sqrt(diag[j]);
    logdet += std::log(diag[j]);
    lx[cp[j]] = sd;
    for (int q = cp[j] + 1; q < cp[j + 1]; ++q) lx[q] *= sd;
  }

  CholeskyFactor out;
  out.symbolic = std::move(symbolic);
  out.L = Eigen::Map<const SparseMat>(N, N, cp[N], cp.data(), li.data(), lx.data());
  out.logdet = logdet;
  return out;
}

CholeskyFactor factorize(const SparseSymMatrix& matrix, OrderingKind ordering) {
  return factorize(matrix, analyze(matrix, ordering));
}

VectorXd CholeskyFactor::solve(const VectorXd& rhs) const {
  if (rhs.size() != L.rows()) throw ParameterError("CholeskyFactor::solve: length mismatch");
  VectorXd w = symbolic->perm * rhs;
  L.triangularView<Eigen::Lower>().solveInPlace(w);
  L.transpose().triangularView<Eigen::Upper>().solveInPlace(w);
  return symbolic->perm.inverse() * w;
}

MatrixXd CholeskyFactor::solve(const MatrixXd& rhs) const {
  if (rhs.rows() != L.rows()) throw ParameterError("CholeskyFactor::solve: row mismatch");
  MatrixXd w = symbolic->perm * rhs;
  L.triangularView<Eigen::Lower>().solveInPlace(w);
  L.transpose().triangularView<Eigen::Upper>().solveInPlace(w);
  return symbolic->perm.inverse() * w;
}

VectorXd solve(const CholeskyFactor& factor, const VectorXd& rhs) {
  return factor.solve(rhs);
}

double spectral_bound(const SparseSymMatrix& matrix) {
  const int N = matrix.order();
  VectorXd rowsum = VectorXd::Zero(N);
  for (int j = 0; j < matrix.lower.outerSize(); ++j)
    for (SparseMat::InnerIterator it(matrix.lower, j); it; ++it) {
      rowsum[it.row()] += std::abs(it.value());
      if (it.row() != it.col()) rowsum[it.col()] += std::abs(it.value());
    }
  return rowsum.maxCoeff();
}

double spectral_bound(const MatrixXd& matrix) {
  return matrix.cwiseAbs().rowwise().sum().maxCoeff();
}

void write_matrix_market(const SparseSymMatrix& matrix, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("write_matrix_market: cannot open " + path);
  out << "%%MatrixMarket matrix coordinate real symmetric\n";
  out << matrix.order() << " " << matrix.order() << " " << matrix.nonzeros() << "\n";
  char buf[64];
  for (int j = 0; j < matrix.lower.outerSize(); ++j)
    for (SparseMat::InnerIterator it(matrix.lower, j); it; ++it) {
      std::snprintf(buf, sizeof buf, "%d %d %.17g\n", static_cast<int>(it.row()) + 1,
                    static_cast<int>(it.col()) + 1, it.value());
      out << buf;
    }
}

DenseCholesky factorize_dense(const MatrixXd& matrix) {
  DenseCholesky out;
  out.llt.compute(matrix);
  if (out.llt.info() != Eigen::Success)
    throw NotPositiveDefinite("factorize_dense: matrix not positive definite");
  out.logdet = 2.0 * out.llt.matrixLLT().diagonal().array().log().sum();
  return out;
}

}  // namespace tapergp
