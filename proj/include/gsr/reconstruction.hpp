#pragma once

#include <Eigen/Dense>

#include "gsr/sampling.hpp"
#include "gsr/spectral.hpp"

namespace gsr {

enum class ReconstructionMethod { LS, GLR };

std::string to_string(ReconstructionMethod m);

// Linear reconstruction: an N x |S| matrix applied to observations on S.
struct ReconstructionOperator {
  Eigen::MatrixXd matrix;  // N x |S|
  ReconstructionMethod method = ReconstructionMethod::LS;
  SampleSet sample_set;
  int k = 0;        // bandwidth (LS only)
  double mu = 0.0;  // regularization weight (GLR only)

  int n() const { return static_cast<int>(matrix.rows()); }
};

struct Observation {
  Eigen::VectorXd values;  // one entry per sampled vertex, in sample order
  SampleSet sample_set;
};

// Minimal-2-norm least squares: R = U_k (M_S U_k)^+. Defined for any sample
// set, including empty and smaller-than-k ones; rank deficiency is handled by
// the pseudoinverse with the shared singular-value cutoff.
ReconstructionOperator ls_operator(const BandBasis& b, const SampleSet& s);

// Graph-Laplacian-regularized least squares:
// R = (M_S^T M_S + mu L)^{-1} M_S^T, solved densely.
ReconstructionOperator glr_operator(const Eigen::MatrixXd& l, const SampleSet& s,
                                    double mu);

// R * y. The observation must carry the operator's sample set.
Eigen::VectorXd reconstruct(const ReconstructionOperator& r, const Observation& obs);

}  // namespace gsr
