#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "phg/fixtures.hpp"
#include "phg/transport.hpp"

using namespace phg;

namespace {

CostMatrix unit_costs(size_t rows, size_t cols) {
  CostMatrix c;
  c.costs.assign(rows, std::vector<double>(cols, 1.0));
  return c;
}

}  // namespace

TEST_CASE("identical measures have zero cost") {
  DiscreteMeasure a{{0, 1}, {0.5, 0.5}};
  CostMatrix c;
  c.costs = {{0.0, 1.0}, {1.0, 0.0}};
  CHECK(wasserstein1(a, a, c) == doctest::Approx(0.0));
}

TEST_CASE("point mass to point mass pays the ground distance") {
  DiscreteMeasure a{{3}, {1.0}};
  DiscreteMeasure b{{9}, {1.0}};
  CostMatrix c;
  c.costs = {{2.5}};
  CHECK(wasserstein1(a, b, c) == doctest::Approx(2.5));
}

TEST_CASE("overlapping uniform pairs on a unit triangle cost one half") {
  // a uniform on {v,w}, b uniform on {u,w}; moving the shared half is free.
  DiscreteMeasure a{{1, 2}, {0.5, 0.5}};
  DiscreteMeasure b{{0, 2}, {0.5, 0.5}};
  CostMatrix c;
  c.costs = {{1.0, 1.0}, {1.0, 0.0}};
  CHECK(wasserstein1(a, b, c) == doctest::Approx(0.5));
}

TEST_CASE("mass mismatch is rejected") {
  DiscreteMeasure a{{0}, {1.0}};
  DiscreteMeasure bad{{0, 1}, {0.5, 0.5 + 1e-9}};
  CHECK_THROWS_AS(wasserstein1(a, bad, unit_costs(1, 2)), std::invalid_argument);
  DiscreteMeasure dup{{0, 0}, {0.5, 0.5}};
  CHECK_THROWS_AS(wasserstein1(a, dup, unit_costs(1, 2)), std::invalid_argument);
}

TEST_CASE("random walk measures") {
  Graph k2(2, {{0, 1}});
  auto m = random_walk_measure(k2, 0, 0.0);
  REQUIRE(m.support == std::vector<int>{1});
  CHECK(m.mass[0] == doctest::Approx(1.0));

  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto ms = random_walk_measure(star, 0, 0.0);
  REQUIRE(ms.support.size() == 3);
  for (double x : ms.mass) CHECK(x == doctest::Approx(1.0 / 3.0));

  auto lazy = random_walk_measure(star, 0, 1.0);
  REQUIRE(lazy.support == std::vector<int>{0});
  CHECK(lazy.mass[0] == doctest::Approx(1.0));

  auto half = random_walk_measure(star, 1, 0.5);
  double total = 0;
  for (double x : half.mass) total += x;
  CHECK(total == doctest::Approx(1.0));

  Graph isolated(2, {});
  CHECK_THROWS_AS(random_walk_measure(isolated, 0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(random_walk_measure(k2, 0, 1.5), std::invalid_argument);
}

TEST_CASE("agreement with the brute-force plan enumeration") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> cost_pick(0, 4);

  // Masses over a fixed denominator of 12 keep the oracle's plan
  // enumeration small.
  auto random_measure = [&](int count, int first_id) {
    std::vector<long long> units(count, 1);
    for (int extra = 0; extra < 12 - count; ++extra)
      ++units[std::uniform_int_distribution<int>(0, count - 1)(rng)];
    DiscreteMeasure m;
    for (int i = 0; i < count; ++i) {
      m.support.push_back(first_id + i);
      m.mass.push_back(static_cast<double>(units[i]) / 12.0);
    }
    return m;
  };

  for (int trial = 0; trial < 500; ++trial) {
    int p = size(rng), q = size(rng);
    DiscreteMeasure a = random_measure(p, 0);
    DiscreteMeasure b = random_measure(q, 100);
    CostMatrix c;
    c.costs.assign(p, std::vector<double>(q));
    for (auto& row : c.costs)
      for (auto& x : row) x = cost_pick(rng);

    double solver = wasserstein1(a, b, c);
    double brute = oracle::brute_force_w1(a.mass, b.mass, c.costs);
    CHECK(solver == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("symmetry and triangle inequality on shared metric costs") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> coord(0.0, 4.0);

  for (int trial = 0; trial < 100; ++trial) {
    // Three measures over the same 4 sites with metric costs from points on
    // a line.
    std::vector<double> site(4);
    for (auto& s : site) s = coord(rng);
    auto metric = [&](size_t i, size_t j) { return std::abs(site[i] - site[j]); };
    CostMatrix c;
    c.costs.assign(4, std::vector<double>(4));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) c.costs[i][j] = metric(i, j);

    auto random_measure = [&]() {
      std::vector<long long> units(4, 1);
      for (int extra = 0; extra < 8; ++extra)
        ++units[std::uniform_int_distribution<int>(0, 3)(rng)];
      DiscreteMeasure m;
      for (int i = 0; i < 4; ++i) {
        m.support.push_back(i);
        m.mass.push_back(static_cast<double>(units[i]) / 12.0);
      }
      return m;
    };
    DiscreteMeasure a = random_measure(), b = random_measure(), m = random_measure();

    double ab = wasserstein1(a, b, c);
    double ba = wasserstein1(b, a, c);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-9));

    double am = wasserstein1(a, m, c);
    double mb = wasserstein1(m, b, c);
    CHECK(ab <= am + mb + 1e-9);
  }
}

TEST_CASE("rationalize recovers small fractions") {
  auto r = rationalize(1.0 / 3.0);
  REQUIRE(r.has_value());
  CHECK(r->first == 1);
  CHECK(r->second == 3);
  auto half = rationalize(0.5);
  REQUIRE(half.has_value());
  CHECK(half->second == 2);
  CHECK_FALSE(rationalize(0.1234567890123, 1000).has_value());
}
