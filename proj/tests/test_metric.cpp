#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "trasdim/metric_space.hpp"

using namespace trasdim;

namespace {

MetricSpace path_space(int last) {
  std::vector<std::tuple<int, int, double>> edges;
  for (int i = 0; i < last; ++i) edges.emplace_back(i, i + 1, 1.0);
  return MetricSpace::from_graph(last + 1, edges);
}

std::vector<int> all_points(const MetricSpace& x) {
  std::vector<int> out(x.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

TEST_CASE("matrices validate their metric axioms") {
  const MetricSpace x = MetricSpace::from_matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  CHECK(x.size() == 3);
  CHECK(x.dist(0, 2) == 2);

  // Pseudometric: zero distance between distinct points is legal.
  CHECK_NOTHROW(MetricSpace::from_matrix({{0, 0}, {0, 0}}));
  // Infinite distances are legal.
  CHECK_NOTHROW(MetricSpace::from_matrix({{0, kInf}, {kInf, 0}}));

  CHECK_THROWS_AS(MetricSpace::from_matrix({{0, 1}, {1, 0}, {1, 1}}),
                  std::invalid_argument);  // not square
  CHECK_THROWS_AS(MetricSpace::from_matrix({{0, -1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(MetricSpace::from_matrix({{1}}), std::invalid_argument);
  CHECK_THROWS_AS(MetricSpace::from_matrix({{0, 1}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(
      MetricSpace::from_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}),
      std::invalid_argument);  // triangle: 3 > 1 + 1
  const double nan = std::nan("");
  CHECK_THROWS_AS(MetricSpace::from_matrix({{0, nan}, {nan, 0}}), std::invalid_argument);
}

TEST_CASE("graphs close under shortest paths") {
  const MetricSpace p = path_space(5);
  CHECK(p.size() == 6);
  CHECK(p.dist(0, 5) == 5);
  CHECK(p.dist(2, 4) == 2);
  CHECK(p.dist(3, 3) == 0);

  // Disconnected pieces sit at infinite distance.
  const MetricSpace two = MetricSpace::from_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK(two.dist(0, 1) == 1);
  CHECK(std::isinf(two.dist(1, 2)));

  // Parallel edges keep the shortest; indirect routes can undercut edges.
  const MetricSpace m = MetricSpace::from_graph(
      3, {{0, 1, 5.0}, {0, 1, 2.0}, {1, 2, 1.0}, {0, 2, 10.0}});
  CHECK(m.dist(0, 1) == 2);
  CHECK(m.dist(0, 2) == 3);

  CHECK_THROWS_AS(MetricSpace::from_graph(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(MetricSpace::from_graph(2, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(MetricSpace::from_graph(0, {}), std::invalid_argument);
}

TEST_CASE("grids measure words in the chosen norm") {
  const MetricSpace g1 = MetricSpace::grid(12, 2, MetricSpace::Norm::L1);
  CHECK(g1.size() == 169);
  const MetricSpace gi = MetricSpace::grid(12, 2, MetricSpace::Norm::LInf);

  REQUIRE(g1.grid_meta().has_value());
  CHECK(g1.grid_meta()->side == 12);
  CHECK(g1.grid_meta()->dim == 2);

  const int a = g1.grid_id({0, 0});
  const int b = g1.grid_id({3, 7});
  CHECK(g1.dist(a, b) == 10);
  CHECK(gi.dist(a, b) == 7);
  CHECK(g1.grid_coords(b) == std::vector<int>{3, 7});

  const MetricSpace line = MetricSpace::grid(60, 1, MetricSpace::Norm::L1);
  CHECK(line.size() == 61);
  CHECK(line.dist(0, 60) == 60);

  CHECK_NOTHROW(MetricSpace::grid(49, 2, MetricSpace::Norm::L1));  // 2500 points
  CHECK_THROWS_AS(MetricSpace::grid(50, 2, MetricSpace::Norm::L1),
                  std::invalid_argument);
  CHECK_THROWS_AS(MetricSpace::grid(-1, 2, MetricSpace::Norm::L1),
                  std::invalid_argument);
  CHECK_THROWS_AS(MetricSpace::grid(3, 0, MetricSpace::Norm::L1),
                  std::invalid_argument);
  CHECK(!path_space(3).grid_meta().has_value());
}

TEST_CASE("disjoint unions keep parts infinitely far apart") {
  const MetricSpace u = MetricSpace::disjoint_union(path_space(2), path_space(1));
  CHECK(u.size() == 5);
  CHECK(u.dist(0, 2) == 2);
  CHECK(u.dist(3, 4) == 1);
  CHECK(std::isinf(u.dist(2, 3)));

  const SubspacePartition p = scale_components(u, all_points(u), 2);
  CHECK(p.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4}});
  CHECK(p.diameters == std::vector<double>{2, 1});
}

TEST_CASE("path components at small scales") {
  const MetricSpace p = path_space(29);
  const SubspacePartition one = scale_components(p, all_points(p), 2);
  CHECK(one.blocks.size() == 1);
  CHECK(one.diameters == std::vector<double>{29});

  // d < 1 never holds between distinct integer points.
  const SubspacePartition all = scale_components(p, all_points(p), 1);
  CHECK(all.blocks.size() == 30);
  CHECK(mesh(p, all.blocks) == 0);

  const SubspacePartition sub = scale_components(p, {0, 1, 2, 7, 8, 20}, 2);
  CHECK(sub.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {7, 8}, {20}});

  CHECK_THROWS_AS(scale_components(p, {1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(scale_components(p, {99}, 2), std::invalid_argument);
  CHECK_THROWS_AS(scale_components(p, {0}, 0), std::invalid_argument);
}

TEST_CASE("threshold graph and ball-chain components coincide") {
  std::mt19937_64 rng(811);
  for (int i = 0; i < 120; ++i) {
    const MetricSpace x = gen::random_metric(rng, 3 + static_cast<int>(rng() % 18));
    const std::vector<int> y = gen::random_subset(rng, x.size());
    if (y.empty()) continue;
    std::uniform_real_distribution<double> scale(0.5, 8.0);
    for (int k = 0; k < 5; ++k) {
      const double r = scale(rng);
      const SubspacePartition fast = scale_components(x, y, r);
      const SubspacePartition literal = scale_components_chain_oracle(x, y, r);
      CHECK(fast.blocks == literal.blocks);
      CHECK(fast.diameters == literal.diameters);
      CHECK(fast.blocks == oracles::components_naive(x, y, r));
    }
  }
}

TEST_CASE("zero-dimensionality at a scale matches the naive check") {
  std::mt19937_64 rng(812);
  for (int i = 0; i < 150; ++i) {
    const MetricSpace x = gen::random_metric(rng, 3 + static_cast<int>(rng() % 10));
    const std::vector<int> y = gen::random_subset(rng, x.size());
    if (y.empty()) continue;
    std::uniform_real_distribution<double> scale(0.5, 6.0);
    std::uniform_real_distribution<double> bound(0.0, 8.0);
    const double r = scale(rng);
    const double b = bound(rng);
    CHECK(is_zero_dim(x, y, r, b) == oracles::zero_dim_naive(x, y, r, b));
  }
  const MetricSpace p = path_space(10);
  CHECK(is_zero_dim(p, {0, 1, 5, 6}, 2, 1));
  CHECK(!is_zero_dim(p, {0, 1, 2, 5, 6}, 2, 1));
  CHECK_THROWS_AS(is_zero_dim(p, {0}, 1, -1), std::invalid_argument);
}

TEST_CASE("diameters, mesh and scale separation") {
  const MetricSpace p = path_space(10);
  CHECK(set_diameter(p, {2, 5, 7}) == 5);
  CHECK(set_diameter(p, {4}) == 0);
  CHECK(set_diameter(p, {}) == 0);
  CHECK(mesh(p, {{0, 1}, {5, 9}}) == 4);
  CHECK(mesh(p, {}) == 0);

  CHECK(is_r_disjoint(p, {{0, 1}, {5, 6}}, 4));
  CHECK(!is_r_disjoint(p, {{0, 1}, {5, 6}}, 5));
  CHECK(is_r_disjoint(p, {{0, 1}}, 100));
  CHECK_THROWS_AS(is_r_disjoint(p, {{0, 1}, {1, 2}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(is_r_disjoint(p, {{0}, {1}}, 0), std::invalid_argument);

  const MetricSpace u = MetricSpace::disjoint_union(path_space(1), path_space(1));
  CHECK(std::isinf(set_diameter(u, {0, 2})));
  CHECK(is_r_disjoint(u, {{0, 1}, {2, 3}}, 1e9));
}
