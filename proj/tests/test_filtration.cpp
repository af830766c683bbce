#include <stdexcept>
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "phg/filtration.hpp"
#include "phg/fixtures.hpp"

using namespace phg;

TEST_CASE("degree filtration") {
  auto c5 = degree_filtration(make_cycle(5));
  for (double v : c5.vertex_values) CHECK(v == 2.0);

  auto k4 = degree_filtration(make_complete(4));
  for (double v : k4.vertex_values) CHECK(v == 3.0);

  // A..M: the two leaves at 1, the seven middle vertices at 2, the rest at 3.
  auto fig4 = degree_filtration(make_fig4_example());
  std::vector<double> expected{1, 1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3};
  CHECK(fig4.vertex_values == expected);

  // Lower-star edges sit at the max of their endpoints.
  const Graph g = make_fig4_example();
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    CHECK((*fig4.edge_values)[e] ==
          std::max(fig4.vertex_values[u], fig4.vertex_values[v]));
  }
}

TEST_CASE("sorted Laplacian assignment") {
  auto k2 = laplacian_filtration(Graph(2, {{0, 1}}), LaplacianMode::sorted_assign);
  CHECK(k2.vertex_values[0] == doctest::Approx(0.0));
  CHECK(k2.vertex_values[1] == doctest::Approx(2.0));

  auto c4 = laplacian_filtration(make_cycle(4), LaplacianMode::sorted_assign);
  std::vector<double> want{0, 2, 2, 4};
  for (int v = 0; v < 4; ++v) CHECK(c4.vertex_values[v] == doctest::Approx(want[v]).epsilon(1e-9));
}

TEST_CASE("heat kernel signature: positive everywhere, constant on vertex-transitive graphs") {
  for (const Graph& g : {make_cycle(5), make_prism(), make_rook4x4()}) {
    auto f = laplacian_filtration(g, LaplacianMode::hks, 0.7);
    for (double v : f.vertex_values) {
      CHECK(v > 0.0);
      CHECK(v == doctest::Approx(f.vertex_values[0]).epsilon(1e-7));
    }
  }
  CHECK_THROWS_AS(laplacian_filtration(make_cycle(4), LaplacianMode::hks, 0.0),
                  std::invalid_argument);
}

TEST_CASE("curvature fixtures") {
  auto k2 = orc_filtration(Graph(2, {{0, 1}}), 0.0);
  CHECK(k2.vertex_values == std::vector<double>{-1.0, -1.0});
  CHECK((*k2.edge_values)[0] == doctest::Approx(0.0));

  auto k3 = orc_filtration(make_cycle(3), 0.0);
  for (double kappa : *k3.edge_values) CHECK(kappa == doctest::Approx(0.5));

  auto c4 = orc_filtration(make_cycle(4), 0.0);
  for (double kappa : *c4.edge_values) CHECK(kappa == doctest::Approx(0.0));
}

TEST_CASE("curvature bounds") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_connected_graph(7, 0.4, rng);
    auto f = orc_filtration(g, 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      double kappa = (*f.edge_values)[e];
      CHECK(kappa <= 1.0 + 1e-12);
      // Transport can never cost more than the worst distance between the
      // two neighborhoods.
      int worst = 0;
      for (int a : g.neighbors(u)) {
        auto dist = bfs_distances(g, a);
        for (int b : g.neighbors(v)) worst = std::max(worst, dist[b]);
      }
      CHECK(kappa >= 1.0 - worst - 1e-12);
      CHECK(kappa >= -2.0 - 1e-12);
    }
  }
}

TEST_CASE("curvature against the brute-force plan oracle") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    // Degrees stay <= 4 here so the oracle's plan enumeration stays small.
    Graph g = random_connected_graph(5, 0.5, rng);
    auto f = orc_filtration(g, 0.0);
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edges()[e];
      DiscreteMeasure mu = random_walk_measure(g, u, 0.0);
      DiscreteMeasure mv = random_walk_measure(g, v, 0.0);
      std::vector<std::vector<double>> costs(mu.support.size(),
                                             std::vector<double>(mv.support.size()));
      for (size_t i = 0; i < mu.support.size(); ++i) {
        auto dist = bfs_distances(g, mu.support[i]);
        for (size_t j = 0; j < mv.support.size(); ++j) costs[i][j] = dist[mv.support[j]];
      }
      double brute = oracle::brute_force_w1(mu.mass, mv.mass, costs);
      CHECK((*f.edge_values)[e] == doctest::Approx(1.0 - brute).epsilon(1e-9));
    }
  }
}

TEST_CASE("wl filtration shapes") {
  auto p3 = wl_filtration(make_path(3));
  std::set<double> distinct(p3.vertex_values.begin(), p3.vertex_values.end());
  CHECK(distinct.size() == 2);

  auto c5 = wl_filtration(make_cycle(5));
  for (double v : c5.vertex_values) CHECK(v == c5.vertex_values[0]);
}

TEST_CASE("graphs with identical colorings get identical value multisets in one session") {
  WlFiltrationSession session;
  auto a = wl_filtration(make_two_triangles(), -1, session);
  auto b = wl_filtration(make_hexagon(), -1, session);
  auto ma = a.vertex_values, mb = b.vertex_values;
  std::sort(ma.begin(), ma.end());
  std::sort(mb.begin(), mb.end());
  CHECK(ma == mb);
}

TEST_CASE("k-WL simplex weights") {
  // K2: the lone edge gets a positive index, both vertices sit at 0.
  auto w = kwl_simplex_weights(Graph(2, {{0, 1}}), 2);
  CHECK(w.at({0}) == 0.0);
  CHECK(w.at({1}) == 0.0);
  CHECK(w.at({0, 1}) > 0.0);

  auto multiset_of = [](const std::map<std::vector<int>, double>& weights) {
    std::vector<double> vals;
    for (auto& [simplex, value] : weights)
      if (simplex.size() == 2) vals.push_back(value);
    std::sort(vals.begin(), vals.end());
    return vals;
  };

  {
    WlFiltrationSession session;
    auto wr = kwl_simplex_weights(make_rook4x4(), 2, session);
    auto ws = kwl_simplex_weights(make_shrikhande(), 2, session);
    CHECK(multiset_of(wr) == multiset_of(ws));
  }
  {
    WlFiltrationSession session;
    auto wa = kwl_simplex_weights(make_complete_bipartite(3, 3), 2, session);
    auto wb = kwl_simplex_weights(make_prism(), 2, session);
    CHECK(multiset_of(wa) != multiset_of(wb));
  }
}

TEST_CASE("perturbation to injectivity") {
  FiltrationAssignment injective{{0.0, 1.0, 2.0}, std::nullopt};
  auto same = perturb_to_injective(injective, 0.5);
  CHECK(same.vertex_values == injective.vertex_values);

  FiltrationAssignment constant{std::vector<double>(6, 3.0), std::nullopt};
  auto spread = perturb_to_injective(constant, 0.25);
  std::set<double> distinct(spread.vertex_values.begin(), spread.vertex_values.end());
  CHECK(distinct.size() == 6);
  for (double v : spread.vertex_values) {
    CHECK(v >= 3.0);
    CHECK(v < 3.25);
  }

  std::mt19937 rng(47);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  std::uniform_real_distribution<double> eps_pick(1e-6, 0.5);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + trial % 9;
    FiltrationAssignment f;
    for (int v = 0; v < n; ++v) f.vertex_values.push_back(value(rng));
    if (trial % 3 == 0 && n >= 2) f.vertex_values[1] = f.vertex_values[0];  // force a tie
    double eps = eps_pick(rng);
    auto g = perturb_to_injective(f, eps);

    std::set<double> distinct2(g.vertex_values.begin(), g.vertex_values.end());
    CHECK(distinct2.size() == static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      CHECK(std::abs(g.vertex_values[v] - f.vertex_values[v]) < eps);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (f.vertex_values[u] < f.vertex_values[v])
          CHECK(g.vertex_values[u] < g.vertex_values[v]);
  }

  CHECK_THROWS_AS(perturb_to_injective(injective, 0.0), std::invalid_argument);
}

TEST_CASE("equivariance: permuting the graph permutes the filtration, value for value") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(7, 0.45, rng);
    VertexPermutation p = random_permutation(7, rng);
    Graph h = permute(g, p);

    auto check_pair = [&](const FiltrationAssignment& fg, const FiltrationAssignment& fh) {
      for (int v = 0; v < 7; ++v)
        CHECK(fh.vertex_values[p(v)] == doctest::Approx(fg.vertex_values[v]).epsilon(1e-9));
      if (fg.edge_values)
        for (int e = 0; e < g.edge_count(); ++e) {
          auto [u, v] = g.edges()[e];
          int moved = h.edge_index(p(u), p(v));
          CHECK((*fh.edge_values)[moved] ==
                doctest::Approx((*fg.edge_values)[e]).epsilon(1e-9));
        }
    };

    check_pair(degree_filtration(g), degree_filtration(h));
    check_pair(laplacian_filtration(g, LaplacianMode::hks),
               laplacian_filtration(h, LaplacianMode::hks));
    check_pair(orc_filtration(g, 0.0), orc_filtration(h, 0.0));

    // Color indices are only consistent within a session; process both
    // graphs through one.
    WlFiltrationSession session;
    auto coloring_g = wl1_refine(g, WlInit::degree, session.table);
    auto coloring_h = wl1_refine(h, WlInit::degree, session.table);
    int rounds = std::max(coloring_g.stable_at, coloring_h.stable_at);
    check_pair(wl_filtration(g, rounds, session), wl_filtration(h, rounds, session));
  }
}
