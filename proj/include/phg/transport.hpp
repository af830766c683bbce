#pragma once

#include <optional>
#include <vector>

#include "phg/graph.hpp"

namespace phg {

// Finitely supported probability measure. Masses must be nonnegative and sum
// to 1 within 1e-12; support ids must be distinct.
struct DiscreteMeasure {
  std::vector<int> support;
  std::vector<double> mass;

  void validate() const;
};

// Nonnegative finite |A| x |B| ground costs.
struct CostMatrix {
  std::vector<std::vector<double>> costs;

  void validate(size_t rows, size_t cols) const;
};

// Exact first Wasserstein distance via successive-shortest-path min-cost
// flow on the bipartite transport network. Masses are scaled to integer
// units over a common denominator when one exists (always the case for
// random-walk measures), so the solve is exact.
double wasserstein1(const DiscreteMeasure& a, const DiscreteMeasure& b, const CostMatrix& c);

// One-step lazy random walk measure: alpha at u, (1-alpha)/deg(u) at each
// neighbor.
DiscreteMeasure random_walk_measure(const Graph& g, int u, double alpha);

// Best rational approximation p/q with q <= max_den, if one matches x to
// within 1e-11.
std::optional<std::pair<long long, long long>> rationalize(double x, long long max_den = 1000000);

}  // namespace phg
