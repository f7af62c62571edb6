#include "gsr/numeric.hpp"

#include <Eigen/SVD>

namespace gsr {

SvdPinv pinv_svd(const Eigen::MatrixXd& a) {
  SvdPinv out;
  if (a.rows() == 0 || a.cols() == 0) {
    out.pinv = Eigen::MatrixXd::Zero(a.cols(), a.rows());
    out.singular_values = Eigen::VectorXd();
    return out;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  out.singular_values = s;
  out.cutoff = singular_cutoff(a.rows(), a.cols(), s.size() > 0 ? s(0) : 0.0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > out.cutoff) {
      inv(i) = 1.0 / s(i);
      ++out.rank;
    }
  }
  out.pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
  return out;
}

int numerical_rank(const Eigen::MatrixXd& a) { return pinv_svd(a).rank; }

}  // namespace gsr
