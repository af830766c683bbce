#pragma once

#include <vector>

#include "phg/filtration.hpp"
#include "phg/graph.hpp"

namespace phg {

struct Simplex {
  std::vector<int> vertices;  // strictly ascending
  double value = 0.0;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// Simplices in filtration order: by (value, dimension, lexicographic vertex
// tuple), so every prefix is a face-closed subcomplex.
struct FilteredComplex {
  std::vector<Simplex> simplices;
  int k_max = 0;

  // Distinct filtration values, ascending.
  std::vector<double> critical_values() const;
};

// Every clique of g with at most k+1 vertices, valued by the max over its
// vertices and (when edge values are present) over its edges.
FilteredComplex clique_complex(const Graph& g, const FiltrationAssignment& f, int k);

// Complete (k-1)-skeleton on V weighted by kwl_simplex_weights.
FilteredComplex kwl_complex(const Graph& g, int k, WlFiltrationSession& session, int rounds = -1);
FilteredComplex kwl_complex(const Graph& g, int k);

long long euler_characteristic(const FilteredComplex& c);

// Scans the ordering invariant: faces present and never after their cofaces.
bool is_valid_filtration_order(const FilteredComplex& c);

}  // namespace phg
