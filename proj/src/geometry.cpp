#include "tapergp/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "tapergp/rng.hpp"

namespace tapergp {

namespace {

double pair_distance(const MatrixXd& pts, int a, int b, Norm norm) {
  if (norm == Norm::max)
    return (pts.row(a) - pts.row(b)).cwiseAbs().maxCoeff();
  return (pts.row(a) - pts.row(b)).norm();
}

}  // namespace

LocationSet LocationSet::create(MatrixXd pts, double min_sep) {
  if (pts.rows() < 1 || pts.cols() < 1)
    throw ParameterError("LocationSet: need n >= 1, d >= 1");
  if (!pts.allFinite()) throw ParameterError("LocationSet: non-finite coordinate");
  if (min_sep < 0) throw ParameterError("LocationSet: min_sep must be nonnegative");
  const int n = static_cast<int>(pts.rows());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      double d = (pts.row(a) - pts.row(b)).cwiseAbs().maxCoeff();
      if (d == 0.0) {
        std::ostringstream msg;
        msg << "LocationSet: duplicate sites " << a << " and " << b;
        throw ParameterError(msg.str());
      }
      if (min_sep > 0 && d < min_sep * (1.0 - 1e-12)) {
        std::ostringstream msg;
        msg << "LocationSet: sites " << a << " and " << b << " closer than min_sep";
        throw ParameterError(msg.str());
      }
    }
  LocationSet out;
  out.points = std::move(pts);
  out.min_sep = min_sep;
  return out;
}

LocationSet sample_perturbed_grid(const GridDesign& design, std::uint64_t seed) {
  if (design.m < 1) throw ParameterError("sample_perturbed_grid: m >= 1 required");
  if (!(design.delta > 0.0) || design.delta > 1.0)
    throw ParameterError("sample_perturbed_grid: delta in (0, 1] required");
  if (!(design.spacing > 0.0))
    throw ParameterError("sample_perturbed_grid: spacing > 0 required");

  const int m = design.m;
  const double h = design.spacing;
  const double half_side = 0.5 * (1.0 - design.delta) * h;  // offset bound per axis
  const int per_axis = 2 * m;
  MatrixXd pts(per_axis * per_axis, 2);

  std::mt19937_64 gen = make_stream(seed, 0);
  std::uniform_real_distribution<double> unif(-half_side, half_side);
  int row = 0;
  for (int ix = 0; ix < per_axis; ++ix) {
    const double cx = (ix - m + 0.5) * h;
    for (int iy = 0; iy < per_axis; ++iy) {
      const double cy = (iy - m + 0.5) * h;
      double ox = 0.0, oy = 0.0;
      if (half_side > 0.0) {  // delta = 1: regular grid, seed-independent
        ox = unif(gen);
        oy = unif(gen);
      }
      pts(row, 0) = cx + ox;
      pts(row, 1) = cy + oy;
      ++row;
    }
  }
  LocationSet out;
  out.points = std::move(pts);
  out.min_sep = design.delta * h;
  return out;
}

double min_pairwise_distance(const LocationSet& locs, Norm norm) {
  const int n = locs.size();
  if (n < 2) throw ParameterError("min_pairwise_distance: need n >= 2");
  double best = kInf;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      best = std::min(best, pair_distance(locs.points, a, b, norm));
  return best;
}

std::vector<int> neighbors_within(const LocationSet& locs,
                                  const Eigen::RowVectorXd& center, double radius) {
  if (center.size() != locs.dim())
    throw ParameterError("neighbors_within: dimension mismatch");
  if (!(radius > 0.0)) throw ParameterError("neighbors_within: radius > 0 required");
  std::vector<int> idx;
  if (std::isinf(radius)) {
    idx.resize(locs.size());
    for (int a = 0; a < locs.size(); ++a) idx[a] = a;
    return idx;
  }
  const double r2 = radius * radius;
  for (int a = 0; a < locs.size(); ++a)
    if ((locs.points.row(a) - center).squaredNorm() < r2) idx.push_back(a);
  return idx;
}

void write_locations_csv(const LocationSet& locs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("write_locations_csv: cannot open " + path);
  for (int j = 0; j < locs.dim(); ++j) out << (j ? "," : "") << "x" << (j + 1);
  out << "\n";
  out.precision(17);
  for (int a = 0; a < locs.size(); ++a) {
    for (int j = 0; j < locs.dim(); ++j) out << (j ? "," : "") << locs.points(a, j);
    out << "\n";
  }
}

LocationSet read_locations_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("read_locations_csv: cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("read_locations_csv: empty file");
  int d = 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));
  std::vector<double> vals;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int got = 0;
    while (std::getline(ss, cell, ',')) {
      vals.push_back(std::stod(cell));
      ++got;
    }
    if (got != d) throw ParameterError("read_locations_csv: ragged row");
    ++n;
  }
  if (n == 0) throw ParameterError("read_locations_csv: no data rows");
  MatrixXd pts(n, d);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < d; ++j) pts(a, j) = vals[static_cast<size_t>(a) * d + j];
  LocationSet out = LocationSet::create(std::move(pts));
  if (out.size() >= 2) out.min_sep = min_pairwise_distance(out, Norm::max);
  return out;
}

}  // namespace tapergp
