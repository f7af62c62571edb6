#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "gsr/graph.hpp"

namespace gsr {

// Full eigendecomposition of a shift operator. Eigenvalues ascend; the
// eigenvector columns follow a deterministic sign convention (first component
// of magnitude > 1e-8 made positive).
struct SpectralBasis {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, matching order
  ShiftOperatorKind source_kind = ShiftOperatorKind::CombinatorialLaplacian;

  int n() const { return static_cast<int>(eigenvalues.size()); }
};

// First k eigenvector columns (the k lowest graph frequencies).
struct BandBasis {
  int k = 0;
  Eigen::MatrixXd u_k;        // N x k
  double spectral_gap = 0.0;  // lambda_{k+1} - lambda_k, 0 when k = N
  bool degenerate = false;    // spectral_gap <= 1e-10: U_k is not unique

  int n() const { return static_cast<int>(u_k.rows()); }
};

SpectralBasis eigendecompose(const Eigen::MatrixXd& l, ShiftOperatorKind kind);

BandBasis band(const SpectralBasis& basis, int k);

// U_k U_k^T: orthogonal projector onto the bandlimited subspace.
Eigen::MatrixXd band_projector(const BandBasis& b);

// Squared row norms of U_k; they sum to k. These are the weights of the
// weighted-random sampling scheme.
Eigen::VectorXd leverage_scores(const BandBasis& b);

// Disk cache for a basis: one JSON header line {n, k_max, kind, hash}
// followed by raw little-endian doubles, eigenvalues first, then the
// eigenvector matrix row-major.
void save_basis(const std::string& path, const SpectralBasis& basis,
                std::uint64_t graph_hash);
SpectralBasis load_basis(const std::string& path, std::uint64_t expected_hash);

}  // namespace gsr
