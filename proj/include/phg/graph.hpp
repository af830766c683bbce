#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace phg {

// Edges are stored normalized with first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

// Simple undirected graph on dense vertex ids [0, n). Immutable after
// construction and safe to share across threads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges,
        std::optional<std::vector<int>> vertex_labels = std::nullopt,
        std::optional<std::vector<int>> edge_labels = std::nullopt);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // -1 if absent

  const std::optional<std::vector<int>>& vertex_labels() const { return vertex_labels_; }
  const std::optional<std::vector<int>>& edge_labels() const { return edge_labels_; }

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::optional<std::vector<int>> vertex_labels_;
  std::optional<std::vector<int>> edge_labels_;
};

// Bijection [0, n) -> [0, n).
class VertexPermutation {
 public:
  explicit VertexPermutation(std::vector<int> mapping);
  static VertexPermutation identity(int n);

  int operator()(int v) const { return mapping_[v]; }
  int size() const { return static_cast<int>(mapping_.size()); }
  const std::vector<int>& mapping() const { return mapping_; }

 private:
  std::vector<int> mapping_;
};

// Relabels vertices: edge (u,v) maps to (p(u), p(v)); labels are transported.
Graph permute(const Graph& g, const VertexPermutation& p);

std::vector<int> bfs_distances(const Graph& g, int source);  // -1 unreachable
int bfs_diameter(const Graph& g);                            // -1 when disconnected
bool is_connected(const Graph& g);

// Exact isomorphism by backtracking with degree pruning; meant for small n.
bool is_isomorphic(const Graph& a, const Graph& b);

// Cheap isomorphism-invariant fingerprint, used to bucket candidates before
// running the exact test.
std::vector<long long> invariant_key(const Graph& g);

Graph random_graph(int n, double p, std::mt19937& rng);
Graph random_connected_graph(int n, double p, std::mt19937& rng);
VertexPermutation random_permutation(int n, std::mt19937& rng);

}  // namespace phg
