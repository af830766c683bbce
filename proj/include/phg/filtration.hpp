#pragma once

#include <map>
#include <optional>
#include <vector>

#include "phg/graph.hpp"
#include "phg/wl.hpp"

namespace phg {

// Real values on vertices and, optionally, on edges (aligned with the
// graph's sorted edge list). Vertex-level functions extend to edges by the
// lower-star maximum; edge-based functions (curvature) carry their own edge
// values instead.
struct FiltrationAssignment {
  std::vector<double> vertex_values;
  std::optional<std::vector<double>> edge_values;
};

// v -> deg(v), edges by lower-star max.
FiltrationAssignment degree_filtration(const Graph& g);

// Ascending eigenvalues of L = D - A.
std::vector<double> laplacian_spectrum(const Graph& g);

enum class LaplacianMode {
  sorted_assign,  // i-th smallest eigenvalue to vertex i in input order; not
                  // permutation-equivariant
  hks,            // heat kernel signature, equivariant
};

FiltrationAssignment laplacian_filtration(const Graph& g, LaplacianMode mode, double t = 10.0);

// Ollivier-Ricci curvature filtration: vertices at -1, edge (u,v) at
// kappa(u,v) = 1 - W1(mu_u, mu_v) under the shortest-path ground metric.
// Edge values are not lower-star-overridden.
FiltrationAssignment orc_filtration(const Graph& g, double alpha);

// Shared state for color-index filtrations: colors are enumerated in first-
// appearance order (ascending vertex id, graphs in processing order), so
// graphs run through one session get consistent indices.
struct WlFiltrationSession {
  ColorTable table;
  std::map<int, int> color_index;
  int next_index = 1;

  int index_of(int color);
};

// f(v) = enumeration index of v's color after `rounds` refinement rounds
// (rounds < 0: refine to stabilization); edges by lower-star max.
FiltrationAssignment wl_filtration(const Graph& g, int rounds, WlFiltrationSession& session,
                                   WlInit init = WlInit::degree);
FiltrationAssignment wl_filtration(const Graph& g, int rounds = -1);

// Weights for the complete (k-1)-skeleton: simplices of dimension <= k-2 get
// 0; each (k-1)-simplex gets the enumeration index of the canonical color,
// i.e. the relabeled multiset of stable k-FWL colors over all k! orderings
// of its vertices. Keyed by ascending vertex tuple.
std::map<std::vector<int>, double> kwl_simplex_weights(const Graph& g, int k,
                                                       WlFiltrationSession& session,
                                                       int rounds = -1);
std::map<std::vector<int>, double> kwl_simplex_weights(const Graph& g, int k);

// Makes vertex values pairwise distinct while moving nothing by eps or more;
// strictly ordered pairs keep their order, ties break by ascending vertex id.
// Edge values, when present, are re-raised to stay above their endpoints.
FiltrationAssignment perturb_to_injective(const FiltrationAssignment& f, double eps);

}  // namespace phg
