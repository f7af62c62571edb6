#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "gsr/spectral.hpp"

namespace gsr {

// Ordered list of distinct vertex indices; the order records selection
// history, so prefixes of a greedy set are the earlier greedy sets.
struct SampleSet {
  std::vector<int> vertices;

  SampleSet() = default;
  explicit SampleSet(std::vector<int> v) : vertices(std::move(v)) {}

  int size() const { return static_cast<int>(vertices.size()); }
  bool empty() const { return vertices.empty(); }
  bool contains(int v) const;

  SampleSet prefix(int m) const;
  SampleSet without(int v) const;  // order-preserving removal

  std::string to_json() const;  // JSON array of indices
  static SampleSet from_json(const std::string& text);

  bool operator==(const SampleSet& other) const { return vertices == other.vertices; }
};

// Throws if any index is out of [0, n) or repeated.
void validate_sample_set(const SampleSet& s, int n);

enum class Criterion { AOpt, DOpt, EOpt, WeightedRandom };

std::string to_string(Criterion c);
Criterion criterion_from_string(const std::string& name);

// Rows of m picked by s, in selection order: materializes M_S * m without
// forming the sampling matrix.
Eigen::MatrixXd restrict_rows(const Eigen::MatrixXd& m, const SampleSet& s);

// (M_S U_k)(M_S U_k)^T. Principal submatrix of the band projector, so its
// eigenvalues lie in [0, 1].
Eigen::MatrixXd gram(const BandBasis& b, const SampleSet& s);

// Rank and criterion values of one sample set, all derived from the singular
// values of M_S U_k so the zero classification matches the pseudoinverse.
struct SelectionScore {
  int rank = 0;
  double aopt_recip_sum = 0.0;  // sum of 1/lambda over nonzero gram eigenvalues
  double det = 0.0;             // det of the gram (exactly 0 when rank-deficient)
  double log_det = 0.0;         // -inf when rank-deficient; greedy key for DOpt
  double lambda_min = 0.0;      // smallest gram eigenvalue (0 when rank-deficient)
};

SelectionScore score_sample(const BandBasis& b, const SampleSet& s);

// True when `a` is strictly preferable to `b` under c. AOpt compares
// (rank, reciprocal sum) lexicographically: higher rank first, then smaller
// sum; this coincides with minimizing tr(gram^{-1}) on full-rank sets.
bool better_score(Criterion c, const SelectionScore& a, const SelectionScore& b);

// DOpt: det(gram). EOpt: lambda_min(gram). AOpt: the reciprocal
// pseudo-trace, equal to tr(gram^{-1}) when the gram is invertible.
double criterion_value(const BandBasis& b, const SampleSet& s, Criterion c);

// Greedy forward selection under an A/D/E criterion. Nested by construction;
// ties broken by lowest vertex index. For m <= k the selected prefix keeps
// rank(M_S U_k) = |S|.
SampleSet greedy_select(const BandBasis& b, Criterion c, int m);

// m sequential draws without replacement, probability of each unsampled
// vertex proportional to its leverage score, renormalized after every draw.
SampleSet weighted_random_select(const BandBasis& b, int m, std::uint64_t seed);

}  // namespace gsr
