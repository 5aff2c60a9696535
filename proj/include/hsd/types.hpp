#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace hsd {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

enum class Region { Interior, Boundary, Exterior };

/// Result of a membership test: region plus a signed distance proxy
/// (positive inside, negative outside, |defect| <= tol on the boundary).
struct Classification {
  Region status;
  double defect;
};

inline Classification classify(double defect, double tol) {
  if (defect > tol) return {Region::Interior, defect};
  if (defect < -tol) return {Region::Exterior, defect};
  return {Region::Boundary, defect};
}

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void require_dim(Eigen::Index got, Eigen::Index want, const char* what) {
  if (got != want)
    throw DimensionError(std::string(what) + ": expected length " +
                         std::to_string(want) + ", got " + std::to_string(got));
}

}  // namespace hsd
