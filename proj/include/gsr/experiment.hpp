#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gsr/analysis.hpp"
#include "gsr/graph.hpp"
#include "gsr/sampling.hpp"

namespace gsr {

struct GraphModel {
  enum class Type { ER, BA, SBM };
  Type type = Type::ER;
  double p = 0.8;      // ER edge probability
  int m_attach = 3;    // BA attachment count
  int blocks = 10;     // SBM block count
  double p_in = 0.7;   // SBM intra-block probability
  double p_out = 0.1;  // SBM inter-block probability

  std::string name() const;
};

struct ExperimentConfig {
  GraphModel graph_model;
  int n_vertices = 100;
  int n_graph_instances = 10;
  int bandwidth = 0;  // 0 means floor(N/10)
  ShiftOperatorKind shift_kind = ShiftOperatorKind::CombinatorialLaplacian;
  std::vector<Criterion> schemes = {Criterion::AOpt, Criterion::DOpt,
                                    Criterion::EOpt, Criterion::WeightedRandom};
  std::vector<double> snr_list = {1e-1, 1e2, 1e10};
  int n_signals = 200;
  int sample_min = 0;
  int sample_max = 0;  // 0 means 3 * bandwidth (capped at N)
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  std::string basis_cache_dir;  // empty disables the on-disk basis cache
  bool write_svg = false;

  int effective_bandwidth() const;
  int effective_sample_max() const;

  void validate() const;

  // Unknown keys are rejected.
  static ExperimentConfig from_json(const std::string& text);
  static ExperimentConfig from_json_file(const std::string& path);

  std::string canonical_json() const;  // sorted keys, defaults filled in
  std::uint64_t config_hash() const;
};

enum class MetricKind { AnalyticEMSE, EmpiricalMSE, Tau };

std::string to_string(MetricKind m);

struct SweepRow {
  std::string scheme;
  int sample_size = 0;
  double snr = 0.0;  // 0 for tau rows (tau does not depend on SNR)
  int instance = -1; // -1 marks rows aggregated across instances
  MetricKind metric = MetricKind::AnalyticEMSE;
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

// One experiment signal: x is unit-norm bandlimited, y = x + eps/sqrt(snr)
// with eps unit-norm flat-spectrum noise.
std::pair<Eigen::VectorXd, Eigen::VectorXd> generate_experiment_signal(
    const BandBasis& b, double snr, std::uint64_t seed);

// Per (instance, scheme, sample size, SNR): analytic expected MSE plus the
// empirical mean over n_signals reconstructions, with pooled 5%/95%
// per-signal quantiles. Empirical per-signal errors are scaled by the
// bandwidth so both metrics share the closed-form scale (the unit-norm signal
// protocol has expectation E[MSE]/k).
std::vector<SweepRow> run_mse_sweep(const ExperimentConfig& cfg);

// tau(S_i, v_i) along each scheme's selection order, per instance plus
// 5%/95% aggregate bands across instances. Weighted-random orderings are
// always drawn over all N vertices.
std::vector<SweepRow> run_tau_sweep(const ExperimentConfig& cfg);

// CSV with a commented metadata header; canonical column order
// scheme,sample_size,snr,metric,value,ci_low,ci_high,instance.
void write_sweep_csv(std::ostream& out, const ExperimentConfig& cfg,
                     const std::vector<SweepRow>& rows);
std::string sweep_csv_string(const ExperimentConfig& cfg,
                             const std::vector<SweepRow>& rows);

// Minimal SVG: one polyline per scheme over the aggregate rows of `metric`
// at SNR `snr` (ignored for tau), with the quantile band shaded.
std::string sweep_svg_string(const std::vector<SweepRow>& rows, MetricKind metric,
                             double snr);

struct CheckResult {
  std::string name;
  bool passed = false;
  long count = 0;
  double worst_residual = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::string to_json(const ExperimentConfig& cfg) const;
};

// Batch run of the lemma/theorem/Monte-Carlo invariant suite at the config's
// scale. Failures are report content, not exceptions.
VerifyReport verify_theorems(const ExperimentConfig& cfg);

// Cached eigendecomposition helper used by the sweeps when a cache dir is
// configured.
SpectralBasis basis_for(const Graph& g, ShiftOperatorKind kind,
                        const std::string& cache_dir);

// Runs fn(0..n-1) on a pool sized by GSL_THREADS (default: hardware
// concurrency). Results must be written to preallocated slots; the pool
// imposes no ordering.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace gsr
