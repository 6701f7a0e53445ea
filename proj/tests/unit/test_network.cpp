#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"

#include "creasim/network.hpp"

using namespace creasim;

TEST_SUITE("network") {

TEST_CASE("graph normalizes and validates its edge list") {
  Graph g(4, {{2, 0}, {0, 1}, {3, 2}});
  CHECK(g.node_count() == 4);
  CHECK(g.edge_count() == 3);
  const std::vector<std::pair<int, int>> expected = {{0, 1}, {0, 2}, {2, 3}};
  CHECK(g.edges() == expected);
  CHECK(g.neighbors(0) == std::vector<int>{1, 2});
  CHECK(g.neighbors(2) == std::vector<int>{0, 3});
  CHECK(g.degree(0) == 2);
  CHECK(g.degree(1) == 1);
  CHECK(g.degrees() == std::vector<int>{2, 1, 2, 1});

  CHECK_THROWS_AS(Graph(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // same edge reversed
}

TEST_CASE("connectivity") {
  CHECK(Graph(1, {}).is_connected());
  CHECK(Graph(3, {{0, 1}, {1, 2}}).is_connected());
  CHECK(!Graph(3, {{0, 1}}).is_connected());
  CHECK(!Graph(2, {}).is_connected());
}

TEST_CASE("ba generator: size and connectivity invariants") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{10, 2}, {50, 1}, {50, 3}, {2, 1}, {3, 3}}) {
    const Graph g = generate_ba(n, m, 7);
    const int m0 = std::max(m, 2);
    CHECK(g.node_count() == n);
    CHECK(g.edge_count() == (m0 - 1) + static_cast<std::int64_t>(n - m0) * m);
    CHECK(g.is_connected());
    std::int64_t degree_sum = 0;
    for (int d : g.degrees()) degree_sum += d;
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("ba generator: deterministic per seed") {
  const Graph a = generate_ba(60, 2, 123);
  const Graph b = generate_ba(60, 2, 123);
  const Graph c = generate_ba(60, 2, 124);
  CHECK(a.edges() == b.edges());
  CHECK(a.edges() != c.edges());
}

TEST_CASE("ba generator rejects bad parameters") {
  CHECK_THROWS_AS(generate_ba(10, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_ba(1, 1, 1), std::invalid_argument);   // below m0 = 2
  CHECK_THROWS_AS(generate_ba(3, 4, 1), std::invalid_argument);   // below m0 = 4
}

TEST_CASE("degree stats: frozen star oracle") {
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const DegreeStats s = degree_stats(star);
  CHECK(s.degree_sequence == std::vector<int>{3, 1, 1, 1});
  CHECK(s.max_degree == 3);
  CHECK(s.mean_degree == 1.5);
  const std::vector<std::pair<int, double>> expected_ccdf = {{1, 1.0}, {3, 0.25}};
  CHECK(s.ccdf == expected_ccdf);
}

TEST_CASE("loglog fit recovers exact power laws") {
  std::vector<std::pair<int, double>> quad;
  for (int k : {1, 2, 4, 8, 16}) {
    quad.emplace_back(k, 1.0 / (static_cast<double>(k) * k));
  }
  CHECK(fit_loglog_slope(quad) == doctest::Approx(-2.0).epsilon(1e-9));

  const std::vector<std::pair<int, double>> linear = {{1, 1.0}, {2, 2.0}, {3, 3.0}};
  CHECK(fit_loglog_slope(linear) == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(fit_loglog_slope({{1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_loglog_slope({{1, 1.0}, {2, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_loglog_slope({{2, 1.0}, {2, 0.5}}), std::invalid_argument);  // degenerate x
}

TEST_CASE("ccdf tail slope wants a real tail") {
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_WITH_AS(ccdf_tail_slope(star, 1), "insufficient tail points",
                       std::invalid_argument);

  const Graph g = generate_ba(800, 3, 11);
  const double slope = ccdf_tail_slope(g, 3);
  CHECK(slope < -0.5);  // heavy but decreasing tail; the envelope is pinned elsewhere
  CHECK(slope > -4.0);
}

}  // TEST_SUITE
