#pragma once

#include <vector>

#include "phg/complex.hpp"
#include "phg/graph.hpp"

namespace phg {

// A diagram point. Essential features carry `essential = true`; their death
// field is never consulted in comparisons.
struct DiagramPoint {
  double birth = 0.0;
  double death = 0.0;
  bool essential = false;
  long long multiplicity = 1;

  bool operator==(const DiagramPoint& other) const = default;
};

// Multiset of (birth, death) pairs for one homology dimension, canonically
// sorted with finite points first. Zero-persistence points are retained.
struct PersistenceDiagram {
  int dim = 0;
  std::vector<DiagramPoint> points;

  long long total_multiplicity() const;
  long long essential_multiplicity() const;
  void canonicalize();  // sort and merge equal points

  bool operator==(const PersistenceDiagram& other) const = default;
};

struct BettiVector {
  std::vector<long long> betti;  // index = dimension
};

// GF(2) boundary matrix in filtration order. Column j lists the positions of
// the codimension-1 faces of simplex j, ascending and all strictly below j;
// vertex columns are empty.
struct BoundaryMatrix {
  std::vector<std::vector<int>> columns;
};

BoundaryMatrix boundary_matrix(const FilteredComplex& c);

// Union-find with union by size and path compression.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int find(int x);
  bool unite(int x, int y);  // false if already joined
  int component_count() const { return components_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int components_;
};

// Component id per vertex plus the component count (= Betti 0).
std::pair<std::vector<int>, int> connected_components(const Graph& g);

// Dimension-0 diagram by a union-find sweep in filtration order: each vertex
// creates a component at its value; a merging edge kills the younger
// component (elder rule; birth ties break by the larger creator position
// dying); survivors become essential.
PersistenceDiagram persistence_dim0(const FilteredComplex& c);

// Standard GF(2) boundary-matrix column reduction; diagrams for dimensions
// 0..k_max. Pair (i, j) with low(j) = i contributes (value_i, value_j) in
// dim(sigma_i); unpaired creators are essential.
std::vector<PersistenceDiagram> persistence_reduction(const FilteredComplex& c);

// Betti numbers as essential class counts per dimension.
BettiVector betti_numbers(const FilteredComplex& c);

// Persistent Betti number: total multiplicity of dim-`dim` points born at or
// before values[i] and dying strictly after values[j].
long long persistent_betti(const std::vector<PersistenceDiagram>& diags, int dim, int i, int j,
                           const std::vector<double>& values);

enum class DiameterVariant {
  literal,  // count destroyer edges, stop at the first creator
  safe,   // count all destroyer edges (= n - Betti0); always an upper bound
};

int diameter_bound(const FilteredComplex& c, DiameterVariant variant);

}  // namespace phg
