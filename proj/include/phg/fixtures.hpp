#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phg/graph.hpp"

namespace phg {

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_prism();          // triangular prism
Graph make_two_triangles();  // disjoint union of two triangles
Graph make_hexagon();

// 4x4 rook's graph: vertices Z4 x Z4, adjacent iff same row or same column.
Graph make_rook4x4();

// Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
// {+-(1,0), +-(0,1), +-(1,1)}. Same strongly-regular parameters as the
// rook's graph but not isomorphic to it.
Graph make_shrikhande();

// 13-vertex, 14-edge example graph used throughout the tests; vertices are
// named A..M and map alphabetically to 0..12.
Graph make_fig4_example();

// Dispatch by name. Parameterized families take `n` (and `b` for the
// bipartite one): cycle, path, complete, complete_bipartite, prism,
// two_triangles, hexagon, rook4x4, shrikhande, fig4_example.
Graph fixture_by_name(const std::string& name, std::optional<int> n = std::nullopt,
                      std::optional<int> b = std::nullopt);

// One representative per isomorphism class of connected 3-regular graphs on
// n vertices, n in {4, 6, 8, 10}. Deduplicated by invariant bucketing plus an
// exact isomorphism check.
std::vector<Graph> enumerate_connected_cubic(int n);

}  // namespace phg
