#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace creasim {

/// Simple undirected graph over node ids 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;  // the empty graph
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int node_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }

  /// Normalized (min, max) pairs, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// Neighbor ids in ascending order.
  const std::vector<int>& neighbors(int node) const;

  int degree(int node) const;
  const std::vector<int>& degrees() const { return degrees_; }

  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> degrees_;
};

/// Barabási–Albert preferential attachment. The seed topology is a path
/// over the first m0 = max(m, 2) nodes; every later node attaches to m
/// distinct existing nodes drawn with probability proportional to current
/// degree. Edge count is (m0 - 1) + (n - m0) * m, and the graph is
/// connected. Deterministic for a given seed.
Graph generate_ba(int n, int m, std::uint64_t seed);

struct DegreeStats {
  std::vector<int> degree_sequence;            // by node id
  int max_degree = 0;
  double mean_degree = 0.0;
  std::vector<std::pair<int, double>> ccdf;    // (k, fraction of nodes with degree >= k)
};

DegreeStats degree_stats(const Graph& g);

/// Least-squares slope of log y vs log x. Requires >= 2 points, all positive.
double fit_loglog_slope(const std::vector<std::pair<int, double>>& points);

/// Slope of the log-log CCDF over distinct degrees >= k_min. Throws
/// "insufficient tail points" when fewer than 10 distinct degrees qualify.
double ccdf_tail_slope(const Graph& g, int k_min);

}  // namespace creasim
