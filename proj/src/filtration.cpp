#include "phg/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "phg/linalg.hpp"
#include "phg/transport.hpp"

namespace phg {

namespace {

std::vector<double> lower_star_edges(const Graph& g, const std::vector<double>& vertex_values) {
  std::vector<double> ev;
  ev.reserve(g.edge_count());
  for (auto& [u, v] : g.edges()) ev.push_back(std::max(vertex_values[u], vertex_values[v]));
  return ev;
}

}  // namespace

FiltrationAssignment degree_filtration(const Graph& g) {
  FiltrationAssignment f;
  f.vertex_values.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) f.vertex_values.push_back(g.degree(v));
  f.edge_values = lower_star_edges(g, f.vertex_values);
  return f;
}

std::vector<double> laplacian_spectrum(const Graph& g) {
  if (g.vertex_count() < 1) throw std::invalid_argument("spectrum of an empty graph");
  return jacobi_eigen(laplacian_matrix(g)).values;
}

FiltrationAssignment laplacian_filtration(const Graph& g, LaplacianMode mode, double t) {
  int n = g.vertex_count();
  auto eig = jacobi_eigen(laplacian_matrix(g));
  FiltrationAssignment f;
  f.vertex_values.resize(n);
  if (mode == LaplacianMode::sorted_assign) {
    for (int v = 0; v < n; ++v) f.vertex_values[v] = eig.values[v];
  } else {
    if (!(t > 0.0)) throw std::invalid_argument("heat kernel time must be positive");
    for (int v = 0; v < n; ++v) {
      double h = 0.0;
      for (int i = 0; i < n; ++i) {
        double q = eig.vectors[i][v];
        h += std::exp(-t * eig.values[i]) * q * q;
      }
      f.vertex_values[v] = h;
    }
  }
  f.edge_values = lower_star_edges(g, f.vertex_values);
  return f;
}

FiltrationAssignment orc_filtration(const Graph& g, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0,1]");
  FiltrationAssignment f;
  f.vertex_values.assign(g.vertex_count(), -1.0);
  std::vector<double> kappa(g.edge_count());

  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    DiscreteMeasure mu = random_walk_measure(g, u, alpha);
    DiscreteMeasure mv = random_walk_measure(g, v, alpha);

    CostMatrix cost;
    cost.costs.resize(mu.support.size());
    for (size_t i = 0; i < mu.support.size(); ++i) {
      auto dist = bfs_distances(g, mu.support[i]);
      cost.costs[i].resize(mv.support.size());
      for (size_t j = 0; j < mv.support.size(); ++j) {
        int d = dist[mv.support[j]];
        if (d < 0)
          throw std::runtime_error("no path between vertices " +
                                   std::to_string(mu.support[i]) + " and " +
                                   std::to_string(mv.support[j]) +
                                   "; curvature is undefined across components");
        cost.costs[i][j] = d;
      }
    }
    kappa[e] = 1.0 - wasserstein1(mu, mv, cost);
  }
  f.edge_values = std::move(kappa);
  return f;
}

int WlFiltrationSession::index_of(int color) {
  auto [it, inserted] = color_index.insert({color, next_index});
  if (inserted) ++next_index;
  return it->second;
}

FiltrationAssignment wl_filtration(const Graph& g, int rounds, WlFiltrationSession& session,
                                   WlInit init) {
  if (rounds < -1) throw std::invalid_argument("round count must be >= 0 (or -1 to stabilize)");
  WLColoring coloring = wl1_refine(g, init, session.table, rounds);
  const auto& stable = coloring.iterations.back();

  FiltrationAssignment f;
  f.vertex_values.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    f.vertex_values[v] = session.index_of(stable[v]);
  f.edge_values = lower_star_edges(g, f.vertex_values);
  return f;
}

FiltrationAssignment wl_filtration(const Graph& g, int rounds) {
  WlFiltrationSession session;
  return wl_filtration(g, rounds, session);
}

std::map<std::vector<int>, double> kwl_simplex_weights(const Graph& g, int k,
                                                       WlFiltrationSession& session,
                                                       int rounds) {
  if (k != 2 && k != 3) throw std::invalid_argument("simplex weights support k in {2,3}");
  int n = g.vertex_count();
  WLColoring coloring = kwl_refine(g, k, session.table, rounds);
  const auto& stable = coloring.iterations.back();

  auto index_of_tuple = [&](const std::vector<int>& t) {
    long long idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * n + t[i];
    return idx;
  };

  std::map<std::vector<int>, double> weights;

  // All simplices below dimension k-1 carry weight 0.
  std::vector<int> simplex;
  std::function<void(int, int)> low_dims = [&](int start, int size) {
    if (static_cast<int>(simplex.size()) == size) {
      weights[simplex] = 0.0;
      return;
    }
    for (int v = start; v < n; ++v) {
      simplex.push_back(v);
      low_dims(v + 1, size);
      simplex.pop_back();
    }
  };
  for (int size = 1; size <= k - 1; ++size) low_dims(0, size);

  // Each (k-1)-simplex: canonical color of the multiset of stable tuple
  // colors over all orderings of its vertex set, then its session index.
  std::function<void(int)> top_dim = [&](int start) {
    if (static_cast<int>(simplex.size()) == k) {
      std::vector<int> perm = simplex;
      std::vector<long long> colors;
      std::sort(perm.begin(), perm.end());
      do {
        colors.push_back(stable[index_of_tuple(perm)]);
      } while (std::next_permutation(perm.begin(), perm.end()));
      std::sort(colors.begin(), colors.end());
      std::vector<long long> key{kSimplexMultisetTag, k};
      key.insert(key.end(), colors.begin(), colors.end());
      int canonical = session.table.relabel(key);
      weights[simplex] = session.index_of(canonical);
      return;
    }
    for (int v = start; v < n; ++v) {
      simplex.push_back(v);
      top_dim(v + 1);
      simplex.pop_back();
    }
  };
  top_dim(0);
  return weights;
}

std::map<std::vector<int>, double> kwl_simplex_weights(const Graph& g, int k) {
  WlFiltrationSession session;
  return kwl_simplex_weights(g, k, session);
}

FiltrationAssignment perturb_to_injective(const FiltrationAssignment& f, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  int n = static_cast<int>(f.vertex_values.size());

  // Offset unit: small enough that ties spread below eps and below half the
  // smallest gap between distinct values, so strict orderings survive.
  std::vector<double> sorted = f.vertex_values;
  std::sort(sorted.begin(), sorted.end());
  double gap = eps;
  for (int i = 1; i < n; ++i)
    if (sorted[i] > sorted[i - 1]) gap = std::min(gap, sorted[i] - sorted[i - 1]);
  double unit = gap / (2.0 * std::max(1, n));

  // Group tied vertices; the j-th member (by ascending id) moves up by j*unit.
  std::map<double, int> seen;
  FiltrationAssignment out;
  out.vertex_values.resize(n);
  for (int v = 0; v < n; ++v) {
    int j = seen[f.vertex_values[v]]++;
    out.vertex_values[v] = f.vertex_values[v] + j * unit;
  }

  // Edge values pass through unchanged; the complex builder takes the max
  // over endpoints and edge value, which restores monotonicity after the
  // vertex shifts.
  out.edge_values = f.edge_values;
  return out;
}

}  // namespace phg
