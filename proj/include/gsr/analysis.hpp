#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "gsr/reconstruction.hpp"
#include "gsr/sampling.hpp"
#include "gsr/spectral.hpp"

namespace gsr {

// Ratio-form SNR with the derived noise variance sigma^2 = k / (n * snr).
struct NoiseModel {
  double snr = 1.0;
  int k = 0;
  int n = 0;
  double sigma_sq = 0.0;

  NoiseModel(double snr_ratio, int bandwidth, int n_vertices);
};

// Closed-form expected MSE decomposition: E[MSE] = xi1 + sigma^2 * xi2.
struct MseReport {
  double xi1 = 0.0;
  double xi2 = 0.0;
  double sigma_sq = 0.0;
  double expected_mse = 0.0;
  ReconstructionMethod method = ReconstructionMethod::LS;
};

// Effect of removing one vertex from a sample set under LS:
// delta_i = xi_i(S) - xi_i(S \ {v}), tau = (k/N) * delta2. Removing v
// improves the set exactly when SNR < tau.
struct RemovalEffect {
  int vertex = -1;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double tau = 0.0;
};

// || U_k - R M_S U_k ||_F^2: reconstruction error with no observation noise.
// For LS this equals k - rank(M_S U_k).
double xi1(const BandBasis& b, const ReconstructionOperator& r);

// || R ||_F^2: noise sensitivity. For LS this equals the sum of reciprocal
// nonzero eigenvalues of the gram.
double xi2(const ReconstructionOperator& r);

// Rounds an LS xi1 value to its guaranteed integer; throws if it deviates by
// more than 1e-6 (that would indicate a rank/cutoff inconsistency).
double ls_xi1_integer(double raw_xi1, int k);

MseReport expected_mse(const BandBasis& b, const ReconstructionOperator& r,
                       const NoiseModel& nm);

// LS only; v must be in s. Uses full re-evaluation of both sample sets.
RemovalEffect removal_effect(const BandBasis& b, const SampleSet& s, int v,
                             ReconstructionMethod method = ReconstructionMethod::LS);

// xi2 of every prefix of an ordering: entry i is xi2 of the first i vertices,
// entry 0 is 0. One LS operator per prefix.
std::vector<double> xi2_prefix_profile(const BandBasis& b,
                                       const std::vector<int>& ordering);

// For a full vertex ordering v_1..v_N, the 1-based prefix lengths i with
// tau(S_i, v_i) > 0. There are always exactly k of them.
std::vector<int> improving_indices(const BandBasis& b,
                                   const std::vector<int>& ordering);

struct MonteCarloResult {
  double mean = 0.0;
  double std_error = 0.0;
};

// Empirical oracle for the expected-MSE formula: x = U_k g with g standard
// normal, y = x + sigma * eps, error ||x - R M_S y||^2 averaged over draws.
// Per-draw derived RNG streams keep the result independent of evaluation
// order.
MonteCarloResult monte_carlo_mse(const BandBasis& b, const ReconstructionOperator& r,
                                 const NoiseModel& nm, int n_signals,
                                 std::uint64_t seed);

// True iff rank(M_{S_m} U_k) = m for every prefix with m <= min(|S|, k):
// the property a noiseless-optimal greedy scheme guarantees.
bool verify_noiseless_optimal_prefix(const BandBasis& b, const SampleSet& s);

}  // namespace gsr
