#pragma once

#include <vector>

#include "phg/persistence.hpp"

namespace phg {

// Bottleneck distance between diagrams of the same dimension. Finite points
// match via binary search over candidate radii with bipartite matching
// feasibility; essential points pair among themselves by sorted births.
// Differing essential counts give infinity.
double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2);

// Multiset equality with per-coordinate tolerance. Unlike the bottleneck
// distance, this comparator sees zero-persistence points.
bool diagrams_equal(const PersistenceDiagram& d1, const PersistenceDiagram& d2, double tol);

// True iff some dimension's bottleneck distance exceeds the threshold
// (infinity counts as exceeding). Missing dimensions compare as empty.
bool distinguishes(const std::vector<PersistenceDiagram>& diags1,
                   const std::vector<PersistenceDiagram>& diags2, double threshold);

// Smallest dimension whose distance exceeds the threshold, or -1.
int separating_dimension(const std::vector<PersistenceDiagram>& diags1,
                         const std::vector<PersistenceDiagram>& diags2, double threshold);

}  // namespace phg
