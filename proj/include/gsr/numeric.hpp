#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <vector>

namespace gsr {

// Shared zero cutoff for singular values: s is numerically zero iff
// s <= max(rows, cols) * eps * s_max. Every rank decision and pseudoinverse
// truncation in the library goes through this rule so that rank counts,
// reciprocal-eigenvalue sums and reconstruction operators cannot disagree.
inline double singular_cutoff(Eigen::Index rows, Eigen::Index cols, double s_max) {
  const double dim = static_cast<double>(std::max<Eigen::Index>(rows, cols));
  return dim * std::numeric_limits<double>::epsilon() * s_max;
}

// Same rule applied to eigenvalues of a symmetric PSD matrix.
inline double psd_eigen_cutoff(Eigen::Index rows, Eigen::Index cols, double lambda_max) {
  const double dim = static_cast<double>(std::max<Eigen::Index>(rows, cols));
  return dim * std::numeric_limits<double>::epsilon() * std::max(lambda_max, 0.0);
}

struct SvdPinv {
  Eigen::MatrixXd pinv;             // cols x rows
  Eigen::VectorXd singular_values;  // descending, min(rows, cols) entries
  int rank = 0;
  double cutoff = 0.0;
};

// Moore-Penrose pseudoinverse via SVD with the shared cutoff.
SvdPinv pinv_svd(const Eigen::MatrixXd& a);

int numerical_rank(const Eigen::MatrixXd& a);

// Type-7 quantile (linear interpolation) of an ascending-sorted sample.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return std::numeric_limits<double>::quiet_NaN();
  if (sorted.size() == 1) return sorted.front();
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace gsr
