#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace gsr {

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// Connected undirected weighted graph. Edges are stored with u < v, sorted,
// without duplicates or self-loops; the constructor rejects anything else,
// including disconnected inputs.
class Graph {
 public:
  Graph(int n_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  std::vector<std::vector<int>> adjacency_lists() const;
  std::vector<double> weighted_degrees() const;

  // Structural hash (FNV-1a over vertex count and edge list).
  std::uint64_t hash() const;

  // {"n": int, "edges": [[u, v, w], ...]}, vertices 0-indexed.
  std::string to_json() const;
  static Graph from_json(const std::string& text);

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_same(other);
  }

 private:
  bool edges_same(const Graph& other) const;

  int n_;
  std::vector<Edge> edges_;
};

enum class ShiftOperatorKind {
  CombinatorialLaplacian,
  SymmetricNormalizedLaplacian,
};

std::string to_string(ShiftOperatorKind kind);
ShiftOperatorKind shift_kind_from_string(const std::string& name);

// Erdos-Renyi G(n, p), resampled with a fresh stream until connected
// (at most 100 attempts).
Graph generate_er(int n, double p, std::uint64_t seed);

// Barabasi-Albert preferential attachment: initial clique on m vertices,
// every later vertex attaches to m distinct existing vertices with
// probability proportional to current degree.
Graph generate_ba(int n, int m, std::uint64_t seed);

// Stochastic block model with `blocks` near-equal contiguous groups.
// Resampled until connected (at most 100 attempts).
Graph generate_sbm(int n, int blocks, double p_in, double p_out, std::uint64_t seed);

// D - W for the combinatorial Laplacian, I - D^{-1/2} W D^{-1/2} for the
// symmetric normalized one. Exactly symmetrized after assembly.
Eigen::MatrixXd shift_operator(const Graph& g, ShiftOperatorKind kind);

}  // namespace gsr
