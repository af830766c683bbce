#include <stdexcept>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "phg/filtration.hpp"
#include "phg/fixtures.hpp"
#include "phg/metrics.hpp"

using namespace phg;

namespace {

PersistenceDiagram diagram(int dim, std::vector<DiagramPoint> points) {
  PersistenceDiagram d;
  d.dim = dim;
  d.points = std::move(points);
  d.canonicalize();
  return d;
}

PersistenceDiagram random_finite_diagram(std::mt19937& rng, int max_points) {
  std::uniform_int_distribution<int> count(0, max_points);
  std::uniform_real_distribution<double> coord(0.0, 2.0);
  std::vector<DiagramPoint> pts;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    double b = coord(rng), span = coord(rng);
    pts.push_back({b, b + span, false, 1});
  }
  return diagram(0, std::move(pts));
}

}  // namespace

TEST_CASE("bottleneck basics") {
  auto d = diagram(0, {{0, 2, false, 1}, {1, 3, false, 2}});
  CHECK(bottleneck_distance(d, d) == 0.0);

  auto a = diagram(0, {{0, 2, false, 1}});
  auto b = diagram(0, {{0, 1, false, 1}});
  CHECK(bottleneck_distance(a, b) == doctest::Approx(1.0));

  auto one_essential = diagram(0, {{0, 0, true, 1}});
  auto two_essential = diagram(0, {{0, 0, true, 2}});
  CHECK(std::isinf(bottleneck_distance(one_essential, two_essential)));

  CHECK_THROWS_AS(bottleneck_distance(diagram(0, {}), diagram(1, {})), std::invalid_argument);
}

TEST_CASE("essential points pair by sorted births") {
  auto a = diagram(1, {{1, 0, true, 1}, {5, 0, true, 1}});
  auto b = diagram(1, {{2, 0, true, 1}, {5.5, 0, true, 1}});
  CHECK(bottleneck_distance(a, b) == doctest::Approx(1.0));
}

TEST_CASE("diagonal points are free for the bottleneck but visible to equality") {
  auto base = diagram(0, {{0, 3, false, 1}});
  auto padded = diagram(0, {{0, 3, false, 1}, {1, 1, false, 1}});
  CHECK(bottleneck_distance(base, padded) == 0.0);
  CHECK_FALSE(diagrams_equal(base, padded, 1e-12));
  CHECK(diagrams_equal(base, base, 1e-12));
}

TEST_CASE("multiset equality sees multiplicities") {
  auto five = diagram(0, {{2, 2, false, 5}});
  auto four = diagram(0, {{2, 2, false, 4}});
  CHECK_FALSE(diagrams_equal(five, four, 1e-12));
  CHECK(diagrams_equal(five, diagram(0, {{2, 2, false, 5}}), 1e-12));

  auto fig5_d0 = persistence_dim0(
      clique_complex(make_fig4_example(), degree_filtration(make_fig4_example()), 1));
  CHECK(diagrams_equal(fig5_d0, fig5_d0, 1e-12));
}

TEST_CASE("agreement with exhaustive matching on small diagrams") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_finite_diagram(rng, 3);
    auto b = random_finite_diagram(rng, 2);
    std::vector<oracle::FinitePoint> pa, pb;
    for (const auto& p : a.points)
      for (long long i = 0; i < p.multiplicity; ++i) pa.push_back({p.birth, p.death});
    for (const auto& p : b.points)
      for (long long i = 0; i < p.multiplicity; ++i) pb.push_back({p.birth, p.death});
    double brute = oracle::brute_force_bottleneck(pa, pb);
    CHECK(bottleneck_distance(a, b) == doctest::Approx(brute).epsilon(1e-9));
  }
}

TEST_CASE("pseudo-metric properties on random finite diagrams") {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_finite_diagram(rng, 4);
    auto b = random_finite_diagram(rng, 4);
    auto c = random_finite_diagram(rng, 4);
    double ab = bottleneck_distance(a, b);
    double ba = bottleneck_distance(b, a);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
    CHECK(bottleneck_distance(a, a) == 0.0);
    CHECK(ab <= bottleneck_distance(a, c) + bottleneck_distance(c, b) + 1e-9);
  }
}

TEST_CASE("distinguishes: permuted copies never split, known pairs do") {
  std::mt19937 rng(113);
  Graph g = random_connected_graph(7, 0.4, rng);
  Graph h = permute(g, random_permutation(7, rng));
  auto dg = persistence_reduction(clique_complex(g, degree_filtration(g), 2));
  auto dh = persistence_reduction(clique_complex(h, degree_filtration(h), 2));
  CHECK_FALSE(distinguishes(dg, dh, 1e-8));

  // The rook/Shrikhande pair splits under curvature already at k=1.
  Graph rook = make_rook4x4(), shrik = make_shrikhande();
  auto dr = persistence_reduction(clique_complex(rook, orc_filtration(rook, 0.0), 1));
  auto ds = persistence_reduction(clique_complex(shrik, orc_filtration(shrik, 0.0), 1));
  CHECK(distinguishes(dr, ds, 1e-8));
  CHECK(separating_dimension(dr, ds, 1e-8) >= 0);

  // Cubic pair under the constant degree filtration at k=1: identical.
  Graph k33 = make_complete_bipartite(3, 3), prism = make_prism();
  auto da = persistence_reduction(clique_complex(k33, degree_filtration(k33), 1));
  auto db = persistence_reduction(clique_complex(prism, degree_filtration(prism), 1));
  CHECK_FALSE(distinguishes(da, db, 1e-8));
}

TEST_CASE("dimension padding: a missing dimension compares as empty") {
  auto d0 = diagram(0, {{0, 0, true, 1}});
  std::vector<PersistenceDiagram> just_d0{d0};
  std::vector<PersistenceDiagram> with_d1{d0, diagram(1, {{1, 0, true, 1}})};
  CHECK(distinguishes(just_d0, with_d1, 1e-8));
  CHECK(separating_dimension(just_d0, with_d1, 1e-8) == 1);
}
