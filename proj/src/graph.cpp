#include "gsr/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstring>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "gsr/rng.hpp"

namespace gsr {

namespace {

constexpr int kConnectivityRetryCap = 100;

bool connected(int n, const std::vector<Edge>& edges) {
  if (n <= 0) return false;
  if (n == 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n;
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("graph has a self-loop");
    if (e.u < 0 || e.v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (!(e.w > 0.0)) throw std::invalid_argument("edge weight must be positive");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
      throw std::invalid_argument("duplicate edge");
  }
  if (!connected(n_, edges_))
    throw std::invalid_argument("graph is not connected");
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

std::vector<double> Graph::weighted_degrees() const {
  std::vector<double> deg(n_, 0.0);
  for (const auto& e : edges_) {
    deg[e.u] += e.w;
    deg[e.v] += e.w;
  }
  return deg;
}

std::uint64_t Graph::hash() const {
  std::uint64_t h = 0xCBF29CE484222325ull;
  h = fnv1a(h, &n_, sizeof(n_));
  for (const auto& e : edges_) {
    h = fnv1a(h, &e.u, sizeof(e.u));
    h = fnv1a(h, &e.v, sizeof(e.v));
    h = fnv1a(h, &e.w, sizeof(e.w));
  }
  return h;
}

bool Graph::edges_same(const Graph& other) const {
  if (edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v ||
        edges_[i].w != other.edges_[i].w)
      return false;
  }
  return true;
}

std::string Graph::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  auto& arr = j["edges"] = nlohmann::json::array();
  for (const auto& e : edges_) arr.push_back({e.u, e.v, e.w});
  return j.dump();
}

Graph Graph::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON must contain \"n\" and \"edges\"");
  const int n = j.at("n").get<int>();
  std::vector<Edge> edges;
  for (const auto& item : j.at("edges")) {
    if (!item.is_array() || item.size() != 3)
      throw std::invalid_argument("graph JSON edge must be [u, v, w]");
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
  }
  return Graph(n, std::move(edges));
}

std::string to_string(ShiftOperatorKind kind) {
  switch (kind) {
    case ShiftOperatorKind::CombinatorialLaplacian: return "combinatorial";
    case ShiftOperatorKind::SymmetricNormalizedLaplacian: return "normalized";
  }
  throw std::logic_error("unreachable shift kind");
}

ShiftOperatorKind shift_kind_from_string(const std::string& name) {
  if (name == "combinatorial") return ShiftOperatorKind::CombinatorialLaplacian;
  if (name == "normalized") return ShiftOperatorKind::SymmetricNormalizedLaplacian;
  throw std::invalid_argument("unknown shift kind: " + name);
}

Graph generate_er(int n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("ER graph needs n >= 2");
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("ER probability must be in (0, 1]");
  for (int attempt = 0; attempt < kConnectivityRetryCap; ++attempt) {
    Rng rng(derive_seed(seed, stream::kGraphAttempt, attempt));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform() < p) edges.push_back({u, v, 1.0});
    if (connected(n, edges)) return Graph(n, std::move(edges));
  }
  std::ostringstream msg;
  msg << "ER generation failed to produce a connected graph in "
      << kConnectivityRetryCap << " attempts (n=" << n << ", p=" << p << ")";
  throw std::runtime_error(msg.str());
}

Graph generate_ba(int n, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("BA attachment count must be >= 1");
  if (n <= m) throw std::invalid_argument("BA graph needs n > m");
  Rng rng(derive_seed(seed, stream::kGraphAttempt));
  std::vector<Edge> edges;
  std::vector<double> degree(n, 0.0);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      edges.push_back({u, v, 1.0});
      degree[u] += 1.0;
      degree[v] += 1.0;
    }
  std::vector<double> weight;
  std::vector<char> picked;
  for (int v = m; v < n; ++v) {
    weight.assign(degree.begin(), degree.begin() + v);
    picked.assign(v, 0);
    for (int pick = 0; pick < m; ++pick) {
      double total = 0.0;
      for (int u = 0; u < v; ++u)
        if (!picked[u]) total += weight[u];
      int target = -1;
      if (total > 0.0) {
        const double r = rng.uniform() * total;
        double acc = 0.0;
        for (int u = 0; u < v; ++u) {
          if (picked[u]) continue;
          acc += weight[u];
          if (r < acc) {
            target = u;
            break;
          }
        }
        if (target < 0) {  // accumulated rounding pushed r past the last bin
          for (int u = v - 1; u >= 0; --u)
            if (!picked[u] && weight[u] > 0.0) {
              target = u;
              break;
            }
        }
      } else {
        // All unpicked candidates have degree 0 (only possible while the
        // m=1 seed vertex is still isolated): fall back to a uniform draw.
        std::vector<int> open;
        for (int u = 0; u < v; ++u)
          if (!picked[u]) open.push_back(u);
        const auto idx = static_cast<std::size_t>(
            rng.uniform() * static_cast<double>(open.size()));
        target = open[std::min(idx, open.size() - 1)];
      }
      edges.push_back({target, v, 1.0});
      degree[target] += 1.0;
      degree[v] += 1.0;
      picked[target] = 1;
    }
  }
  return Graph(n, std::move(edges));
}

Graph generate_sbm(int n, int blocks, double p_in, double p_out, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("SBM graph needs n >= 2");
  if (blocks < 1 || blocks > n) throw std::invalid_argument("SBM needs 1 <= blocks <= n");
  if (p_in < 0.0 || p_in > 1.0 || p_out < 0.0 || p_out > 1.0)
    throw std::invalid_argument("SBM probabilities must be in [0, 1]");
  if (p_in == 0.0 && p_out == 0.0)
    throw std::invalid_argument("SBM needs p_in or p_out positive");
  // Contiguous near-equal blocks, sizes differing by at most one.
  std::vector<int> block_of(n);
  {
    const int base = n / blocks, extra = n % blocks;
    int v = 0;
    for (int b = 0; b < blocks; ++b) {
      const int size = base + (b < extra ? 1 : 0);
      for (int i = 0; i < size; ++i) block_of[v++] = b;
    }
  }
  for (int attempt = 0; attempt < kConnectivityRetryCap; ++attempt) {
    Rng rng(derive_seed(seed, stream::kGraphAttempt, attempt));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const double p = block_of[u] == block_of[v] ? p_in : p_out;
        if (rng.uniform() < p) edges.push_back({u, v, 1.0});
      }
    if (connected(n, edges)) return Graph(n, std::move(edges));
  }
  std::ostringstream msg;
  msg << "SBM generation failed to produce a connected graph in "
      << kConnectivityRetryCap << " attempts (n=" << n << ", blocks=" << blocks
      << ", p_in=" << p_in << ", p_out=" << p_out << ")";
  throw std::runtime_error(msg.str());
}

Eigen::MatrixXd shift_operator(const Graph& g, ShiftOperatorKind kind) {
  const int n = g.num_vertices();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    w(e.u, e.v) += e.w;
    w(e.v, e.u) += e.w;
  }
  const Eigen::VectorXd deg = w.rowwise().sum();
  Eigen::MatrixXd l;
  if (kind == ShiftOperatorKind::CombinatorialLaplacian) {
    l = -w;
    l.diagonal() += deg;
  } else {
    const Eigen::VectorXd dinv_sqrt =
        deg.array().max(std::numeric_limits<double>::min()).rsqrt();
    l = -(dinv_sqrt.asDiagonal() * w * dinv_sqrt.asDiagonal());
    l.diagonal().array() += 1.0;
  }
  l = ((l + l.transpose()) * 0.5).eval();
  return l;
}

}  // namespace gsr
