#ifndef TAPERGP_TYPES_HPP
#define TAPERGP_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace tapergp {

using Eigen::MatrixXd;
using Eigen::VectorXd;
using Index = Eigen::Index;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense matrices above this order are refused by the dense paths.
inline constexpr int kDefaultDenseCap = 6000;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParameterError : Error {
  using Error::Error;
};

struct SizeError : Error {
  explicit SizeError(const std::string& msg, std::int64_t estimated = -1)
      : Error(msg), estimated_nnz(estimated) {}
  std::int64_t estimated_nnz;
};

// Raised when a Cholesky pivot is nonpositive. `column` is the offending
// index in the original (unpermuted) matrix, or -1 when unknown (dense path).
struct NotPositiveDefinite : Error {
  explicit NotPositiveDefinite(const std::string& msg, int col = -1)
      : Error(msg), column(col) {}
  int column;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace tapergp

#endif
