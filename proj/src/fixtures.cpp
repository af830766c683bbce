#include "phg/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace phg {

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, std::move(edges));
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, std::move(edges));
}

Graph make_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph make_two_triangles() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

Graph make_hexagon() { return make_cycle(6); }

Graph make_rook4x4() {
  auto id = [](int r, int c) { return 4 * r + c; };
  std::vector<Edge> edges;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      for (int c2 = c + 1; c2 < 4; ++c2) edges.push_back({id(r, c), id(r, c2)});
      for (int r2 = r + 1; r2 < 4; ++r2) edges.push_back({id(r, c), id(r2, c)});
    }
  return Graph(16, std::move(edges));
}

Graph make_shrikhande() {
  auto id = [](int x, int y) { return 4 * ((x % 4 + 4) % 4) + ((y % 4 + 4) % 4); };
  const int conn[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  std::vector<Edge> edges;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (auto& d : conn) {
        Edge e = make_edge(id(x, y), id(x + d[0], y + d[1]));
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
      }
  return Graph(16, std::move(edges));
}

Graph make_fig4_example() {
  // Vertices A..M -> 0..12.
  auto v = [](char c) { return c - 'A'; };
  std::vector<Edge> edges;
  const char* pairs[] = {"AM", "BM", "ML", "LI", "IC", "CD", "DJ",
                         "JK", "KL", "KE", "EF", "FG", "GH", "HJ"};
  for (const char* p : pairs) edges.push_back(make_edge(v(p[0]), v(p[1])));
  return Graph(13, std::move(edges));
}

Graph fixture_by_name(const std::string& name, std::optional<int> n, std::optional<int> b) {
  auto need_n = [&](const char* what) {
    if (!n) throw std::invalid_argument(std::string(what) + " needs a size parameter");
    return *n;
  };
  if (name == "cycle") return make_cycle(need_n("cycle"));
  if (name == "path") return make_path(need_n("path"));
  if (name == "complete") return make_complete(need_n("complete"));
  if (name == "complete_bipartite") {
    if (!n || !b) throw std::invalid_argument("complete_bipartite needs two size parameters");
    return make_complete_bipartite(*n, *b);
  }
  if (name == "prism") return make_prism();
  if (name == "two_triangles") return make_two_triangles();
  if (name == "hexagon") return make_hexagon();
  if (name == "rook4x4") return make_rook4x4();
  if (name == "shrikhande") return make_shrikhande();
  if (name == "fig4_example") return make_fig4_example();
  throw std::invalid_argument("unknown fixture name: " + name);
}

namespace {

// Enumerates every labeled 3-regular graph on n vertices exactly once: the
// lowest-index incomplete vertex is completed in a single step by choosing
// the full set of its remaining neighbors among higher incomplete vertices.
void enumerate_cubic_labeled(int n, std::vector<std::vector<int>>& adj,
                             std::vector<int>& deg,
                             const std::function<void()>& emit) {
  int v = -1;
  for (int i = 0; i < n; ++i)
    if (deg[i] < 3) {
      v = i;
      break;
    }
  if (v < 0) {
    emit();
    return;
  }

  std::vector<int> candidates;
  for (int u = v + 1; u < n; ++u)
    if (deg[u] < 3 && std::find(adj[v].begin(), adj[v].end(), u) == adj[v].end())
      candidates.push_back(u);

  int need = 3 - deg[v];
  if (static_cast<int>(candidates.size()) < need) return;

  std::vector<int> pick;
  std::function<void(size_t)> choose = [&](size_t start) {
    if (static_cast<int>(pick.size()) == need) {
      for (int u : pick) {
        adj[v].push_back(u);
        adj[u].push_back(v);
        ++deg[v];
        ++deg[u];
      }
      enumerate_cubic_labeled(n, adj, deg, emit);
      for (int u : pick) {
        adj[v].pop_back();
        adj[u].pop_back();
        --deg[v];
        --deg[u];
      }
      return;
    }
    for (size_t i = start; i < candidates.size(); ++i) {
      // Remaining candidates must still be able to fill the pick.
      if (candidates.size() - i < static_cast<size_t>(need) - pick.size()) break;
      pick.push_back(candidates[i]);
      choose(i + 1);
      pick.pop_back();
    }
  };
  choose(0);
}

}  // namespace

std::vector<Graph> enumerate_connected_cubic(int n) {
  if (n != 4 && n != 6 && n != 8 && n != 10)
    throw std::invalid_argument("connected cubic enumeration supports n in {4,6,8,10}");

  std::vector<Graph> representatives;
  std::vector<std::vector<long long>> keys;

  // Every cubic graph has a labeling with N(0) = {1,2,3}, so that
  // neighborhood can be pinned up front; it cuts the labeled search space by
  // a factor of C(n-1,3) without losing any isomorphism class.
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  for (int u : {1, 2, 3}) {
    adj[0].push_back(u);
    adj[u].push_back(0);
    ++deg[0];
    ++deg[u];
  }
  enumerate_cubic_labeled(n, adj, deg, [&]() {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
      for (int u : adj[v])
        if (v < u) edges.push_back({v, u});
    Graph g(n, std::move(edges));
    if (!is_connected(g)) return;
    auto key = invariant_key(g);
    for (size_t i = 0; i < representatives.size(); ++i)
      if (keys[i] == key && is_isomorphic(representatives[i], g)) return;
    representatives.push_back(std::move(g));
    keys.push_back(std::move(key));
  });
  return representatives;
}

}  // namespace phg
