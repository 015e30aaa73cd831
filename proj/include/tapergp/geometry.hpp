#ifndef TAPERGP_GEOMETRY_HPP
#define TAPERGP_GEOMETRY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tapergp/types.hpp"

namespace tapergp {

enum class Norm { max, euclidean };

// n distinct sites in R^d, one per row. min_sep is a guaranteed lower bound
// on pairwise max-norm distances (0 when unknown). Immutable after creation.
struct LocationSet {
  MatrixXd points;      // n x d
  double min_sep = 0.0;

  int size() const { return static_cast<int>(points.rows()); }
  int dim() const { return static_cast<int>(points.cols()); }
  Eigen::RowVectorXd site(int a) const { return points.row(a); }

  // Validates distinctness and the min_sep bound; throws ParameterError.
  static LocationSet create(MatrixXd pts, double min_sep = 0.0);
};

// Perturbed-grid design: 4m^2 squares of spacing h per axis pair, each
// contributing one site drawn uniformly from an axis-aligned square of side
// (1-delta)*spacing about its center. delta=1 gives the regular grid of
// centers and a guaranteed max-norm separation of delta*spacing.
struct GridDesign {
  int m = 10;
  double delta = 1.0;
  double spacing = 1.0;
};

LocationSet sample_perturbed_grid(const GridDesign& design, std::uint64_t seed);

double min_pairwise_distance(const LocationSet& locs, Norm norm);

// Indices a with ||x_a - center|| < radius (Euclidean, strict), ascending.
// radius = inf returns all indices.
std::vector<int> neighbors_within(const LocationSet& locs,
                                  const Eigen::RowVectorXd& center,
                                  double radius);

void write_locations_csv(const LocationSet& locs, const std::string& path);
LocationSet read_locations_csv(const std::string& path);

}  // namespace tapergp

#endif
