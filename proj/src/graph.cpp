#include "phg/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace phg {

Edge make_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, std::vector<Edge> edges,
             std::optional<std::vector<int>> vertex_labels,
             std::optional<std::vector<int>> edge_labels)
    : n_(n), vertex_labels_(std::move(vertex_labels)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");

  // Normalize, then sort edges together with their labels so the label list
  // stays aligned with the edge list.
  std::vector<std::pair<Edge, int>> tagged(edges.size());
  if (edge_labels && edge_labels->size() != edges.size())
    throw std::invalid_argument("edge label count does not match edge count");
  for (size_t i = 0; i < edges.size(); ++i) {
    Edge e = make_edge(edges[i].first, edges[i].second);
    if (e.first < 0 || e.second >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(e.first) + "," +
                                  std::to_string(e.second) + ")");
    tagged[i] = {e, edge_labels ? (*edge_labels)[i] : 0};
  }
  std::sort(tagged.begin(), tagged.end());
  for (size_t i = 1; i < tagged.size(); ++i)
    if (tagged[i].first == tagged[i - 1].first)
      throw std::invalid_argument("duplicate edge (" +
                                  std::to_string(tagged[i].first.first) + "," +
                                  std::to_string(tagged[i].first.second) + ")");

  edges_.reserve(tagged.size());
  for (auto& [e, lab] : tagged) edges_.push_back(e);
  if (edge_labels) {
    std::vector<int> sorted_labels;
    sorted_labels.reserve(tagged.size());
    for (auto& [e, lab] : tagged) sorted_labels.push_back(lab);
    edge_labels_ = std::move(sorted_labels);
  }

  if (vertex_labels_ && static_cast<int>(vertex_labels_->size()) != n)
    throw std::invalid_argument("vertex label count does not match vertex count");

  adj_.assign(n_, {});
  for (auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  Edge e = u < v ? Edge{u, v} : Edge{v, u};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
  return -1;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && edges_ == other.edges_ &&
         vertex_labels_ == other.vertex_labels_ && edge_labels_ == other.edge_labels_;
}

VertexPermutation::VertexPermutation(std::vector<int> mapping) : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (int x : mapping_) {
    if (x < 0 || x >= static_cast<int>(mapping_.size()) || seen[x])
      throw std::invalid_argument("mapping is not a bijection on [0,n)");
    seen[x] = true;
  }
}

VertexPermutation VertexPermutation::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return VertexPermutation(std::move(m));
}

Graph permute(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.vertex_count())
    throw std::invalid_argument("permutation size does not match vertex count");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto& [u, v] : g.edges()) edges.push_back(make_edge(p(u), p(v)));

  std::optional<std::vector<int>> vlab;
  if (g.vertex_labels()) {
    vlab.emplace(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) (*vlab)[p(v)] = (*g.vertex_labels())[v];
  }
  std::optional<std::vector<int>> elab;
  if (g.edge_labels()) elab = *g.edge_labels();  // aligned with `edges` above

  return Graph(g.vertex_count(), std::move(edges), std::move(vlab), std::move(elab));
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : g.neighbors(v))
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
  }
  return dist;
}

int bfs_diameter(const Graph& g) {
  int diam = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d < 0) return -1;
      diam = std::max(diam, d);
    }
  }
  return diam;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

namespace {

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map_ab,
                    std::vector<bool>& used, int v) {
  int n = a.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || a.degree(v) != b.degree(w)) continue;
    if (a.vertex_labels() && (*a.vertex_labels())[v] != (*b.vertex_labels())[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      bool ea = a.has_edge(u, v), eb = b.has_edge(map_ab[u], w);
      if (ea != eb) ok = false;
      if (ok && ea && a.edge_labels()) {
        int la = (*a.edge_labels())[a.edge_index(u, v)];
        int lb = (*b.edge_labels())[b.edge_index(map_ab[u], w)];
        if (la != lb) ok = false;
      }
    }
    if (!ok) continue;
    map_ab[v] = w;
    used[w] = true;
    if (extend_mapping(a, b, map_ab, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (invariant_key(a) != invariant_key(b)) return false;
  std::vector<int> map_ab(a.vertex_count(), -1);
  std::vector<bool> used(a.vertex_count(), false);
  return extend_mapping(a, b, map_ab, used, 0);
}

std::vector<long long> invariant_key(const Graph& g) {
  int n = g.vertex_count();
  std::vector<long long> key{n, g.edge_count()};

  // Per-vertex (degree, triangle count, sorted BFS distance histogram),
  // sorted over vertices.
  std::vector<std::vector<long long>> rows(n);
  for (int v = 0; v < n; ++v) {
    long long tri = 0;
    const auto& nb = g.neighbors(v);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        if (g.has_edge(nb[i], nb[j])) ++tri;
    auto dist = bfs_distances(g, v);
    std::vector<long long> hist(n + 1, 0);
    for (int d : dist) ++hist[d < 0 ? n : d];
    rows[v] = {g.degree(v), tri};
    rows[v].insert(rows[v].end(), hist.begin(), hist.end());
  }
  std::sort(rows.begin(), rows.end());
  for (auto& r : rows) key.insert(key.end(), r.begin(), r.end());
  return key;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

VertexPermutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  std::shuffle(m.begin(), m.end(), rng);
  return VertexPermutation(std::move(m));
}

}  // namespace phg
