#pragma once

#include <vector>

#include "phg/graph.hpp"

namespace phg {

struct EigenDecomposition {
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[i] pairs with values[i], orthonormal
};

// Cyclic Jacobi rotations on a dense symmetric matrix; sweeps until the
// off-diagonal Frobenius norm drops below `tol`.
EigenDecomposition jacobi_eigen(std::vector<std::vector<double>> a, double tol = 1e-10);

// Combinatorial Laplacian L = D - A as a dense matrix.
std::vector<std::vector<double>> laplacian_matrix(const Graph& g);

}  // namespace phg
