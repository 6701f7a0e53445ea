#include "creasim/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "creasim/rng.hpp"

namespace creasim {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph: node count must be >= 1");
  std::set<std::pair<int, int>> normalized;
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph: self-loop on node " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (!normalized.insert({std::min(a, b), std::max(a, b)}).second) {
      throw std::invalid_argument("graph: duplicate edge");
    }
  }
  edges_.assign(normalized.begin(), normalized.end());
  adjacency_.resize(static_cast<std::size_t>(n));
  for (auto [a, b] : edges_) {
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  degrees_.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& adj = adjacency_[static_cast<std::size_t>(v)];
    std::sort(adj.begin(), adj.end());
    degrees_[static_cast<std::size_t>(v)] = static_cast<int>(adj.size());
  }
}

const std::vector<int>& Graph::neighbors(int node) const {
  return adjacency_.at(static_cast<std::size_t>(node));
}

int Graph::degree(int node) const {
  return degrees_.at(static_cast<std::size_t>(node));
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(static_cast<std::size_t>(n_), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n_;
}

Graph generate_ba(int n, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("ba: m must be >= 1");
  const int m0 = std::max(m, 2);
  if (n < m0) {
    throw std::invalid_argument("ba: nodes must be >= max(m, 2) = " + std::to_string(m0));
  }

  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  // One entry per unit of degree; sampling an entry uniformly is a
  // degree-weighted draw.
  std::vector<int> slots;
  for (int v = 1; v < m0; ++v) {
    edges.emplace_back(v - 1, v);
    slots.push_back(v - 1);
    slots.push_back(v);
  }

  std::vector<int> targets;
  for (int v = m0; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const int t = slots[rng.next_below(slots.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (int t : targets) edges.emplace_back(t, v);
    // Degree contributions become drawable only after this node is wired up.
    for (int t : targets) {
      slots.push_back(t);
      slots.push_back(v);
    }
  }
  return Graph(n, std::move(edges));
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.degree_sequence = g.degrees();
  double sum = 0.0;
  for (int d : stats.degree_sequence) {
    stats.max_degree = std::max(stats.max_degree, d);
    sum += d;
  }
  stats.mean_degree = sum / static_cast<double>(g.node_count());

  std::vector<int> sorted = stats.degree_sequence;
  std::sort(sorted.begin(), sorted.end());
  const auto n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;  // distinct degrees only
    const double at_least = n - static_cast<double>(i);
    stats.ccdf.emplace_back(sorted[i], at_least / n);
  }
  return stats;
}

double fit_loglog_slope(const std::vector<std::pair<int, double>>& points) {
  if (points.size() < 2) throw std::invalid_argument("loglog fit needs >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [k, y] : points) {
    if (k <= 0 || y <= 0.0) throw std::invalid_argument("loglog fit needs positive points");
    const double lx = std::log(static_cast<double>(k));
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const auto n = static_cast<double>(points.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("loglog fit is degenerate");
  return (n * sxy - sx * sy) / denom;
}

double ccdf_tail_slope(const Graph& g, int k_min) {
  std::vector<std::pair<int, double>> tail;
  for (auto [k, frac] : degree_stats(g).ccdf) {
    if (k >= k_min) tail.emplace_back(k, frac);
  }
  if (tail.size() < 10) throw std::invalid_argument("insufficient tail points");
  return fit_loglog_slope(tail);
}

}  // namespace creasim
