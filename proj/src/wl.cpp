#include "phg/wl.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace phg {

namespace {

// Key tags keep the different key shapes disjoint inside one table.
enum Tag : long long {
  kInitDegree = 1,
  kInitLabel = 2,
  kInitConstant = 3,
  kRefine1 = 4,
  kInitK = 5,
  kRefineK = 6,
};

std::atomic<int> next_table_id{1};

// Partition signature: colors renumbered by first appearance, so two color
// vectors inducing the same partition produce identical signatures.
std::vector<int> partition_signature(const std::vector<int>& colors) {
  std::map<int, int> renumber;
  std::vector<int> sig(colors.size());
  for (size_t i = 0; i < colors.size(); ++i) {
    auto [it, inserted] = renumber.insert({colors[i], static_cast<int>(renumber.size())});
    sig[i] = it->second;
  }
  return sig;
}

}  // namespace

ColorTable::ColorTable() : table_id_(next_table_id.fetch_add(1)) {}

int ColorTable::relabel(const std::vector<long long>& key) {
  auto [it, inserted] = table_.insert({key, next_});
  if (inserted) ++next_;
  return it->second;
}

std::map<int, long long> WLColoring::histogram(size_t iteration) const {
  std::map<int, long long> h;
  for (int c : iterations.at(iteration)) ++h[c];
  return h;
}

WLColoring wl1_refine(const Graph& g, WlInit init, ColorTable& table, int forced_rounds) {
  int n = g.vertex_count();
  WLColoring out;
  out.table_id = table.id();
  out.k = 1;

  std::vector<int> colors(n);
  for (int v = 0; v < n; ++v) {
    switch (init) {
      case WlInit::degree:
        colors[v] = table.relabel({kInitDegree, g.degree(v)});
        break;
      case WlInit::labels:
        if (!g.vertex_labels())
          throw std::invalid_argument("label initialization requested but graph is unlabelled");
        colors[v] = table.relabel({kInitLabel, (*g.vertex_labels())[v]});
        break;
      case WlInit::constant:
        colors[v] = table.relabel({kInitConstant, 0});
        break;
    }
  }
  out.iterations.push_back(colors);

  int max_rounds = forced_rounds >= 0 ? forced_rounds : n + 1;
  out.stable_at = -1;
  for (int round = 1; round <= max_rounds; ++round) {
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long long> key{kRefine1, colors[v]};
      std::vector<long long> nb;
      nb.reserve(g.degree(v));
      for (int u : g.neighbors(v)) nb.push_back(colors[u]);
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      next[v] = table.relabel(key);
    }
    bool stable = partition_signature(next) == partition_signature(colors);
    colors = std::move(next);
    out.iterations.push_back(colors);
    if (stable && out.stable_at < 0) {
      out.stable_at = round;
      if (forced_rounds < 0) break;
    }
  }
  if (out.stable_at < 0) out.stable_at = static_cast<int>(out.iterations.size()) - 1;
  return out;
}

WLColoring kwl_refine(const Graph& g, int k, ColorTable& table, int forced_rounds) {
  if (k != 2 && k != 3) throw std::invalid_argument("k-WL supports k in {2,3}");
  int n = g.vertex_count();
  if ((k == 2 && n > 40) || (k == 3 && n > 16))
    throw std::invalid_argument("graph too large for k-WL tuple storage (n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");

  long long tuple_count = 1;
  for (int i = 0; i < k; ++i) tuple_count *= n;

  auto tuple_of = [&](long long idx, std::vector<int>& t) {
    for (int i = k - 1; i >= 0; --i) {
      t[i] = static_cast<int>(idx % n);
      idx /= n;
    }
  };
  auto index_of = [&](const std::vector<int>& t) {
    long long idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * n + t[i];
    return idx;
  };

  WLColoring out;
  out.table_id = table.id();
  out.k = k;

  // Initial color: ordered isomorphism type of the induced tuple subgraph
  // (equality pattern, adjacency pattern, labels when present).
  std::vector<int> colors(tuple_count);
  {
    std::vector<int> t(k);
    for (long long idx = 0; idx < tuple_count; ++idx) {
      tuple_of(idx, t);
      std::vector<long long> key{kInitK, k};
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
          key.push_back(t[i] == t[j] ? 1 : 0);
          key.push_back(g.has_edge(t[i], t[j]) ? 1 : 0);
          if (g.edge_labels()) {
            int e = g.edge_index(t[i], t[j]);
            key.push_back(e >= 0 ? (*g.edge_labels())[e] : -1);
          }
        }
      if (g.vertex_labels())
        for (int i = 0; i < k; ++i) key.push_back((*g.vertex_labels())[t[i]]);
      colors[idx] = table.relabel(key);
    }
  }
  out.iterations.push_back(colors);

  int max_rounds = forced_rounds >= 0 ? forced_rounds : static_cast<int>(tuple_count) + 1;
  out.stable_at = -1;
  std::vector<int> t(k), swapped(k);
  for (int round = 1; round <= max_rounds; ++round) {
    std::vector<int> next(tuple_count);
    for (long long idx = 0; idx < tuple_count; ++idx) {
      tuple_of(idx, t);
      // For every replacement vertex u, the k-tuple of colors obtained by
      // substituting u into each position.
      std::vector<std::vector<long long>> entries;
      entries.reserve(n);
      for (int u = 0; u < n; ++u) {
        std::vector<long long> entry(k);
        swapped = t;
        for (int pos = 0; pos < k; ++pos) {
          int saved = swapped[pos];
          swapped[pos] = u;
          entry[pos] = colors[index_of(swapped)];
          swapped[pos] = saved;
        }
        entries.push_back(std::move(entry));
      }
      std::sort(entries.begin(), entries.end());
      std::vector<long long> key{kRefineK, k, colors[idx]};
      for (auto& e : entries) key.insert(key.end(), e.begin(), e.end());
      next[idx] = table.relabel(key);
    }
    bool stable = partition_signature(next) == partition_signature(colors);
    colors = std::move(next);
    out.iterations.push_back(colors);
    if (stable && out.stable_at < 0) {
      out.stable_at = round;
      if (forced_rounds < 0) break;
    }
  }
  if (out.stable_at < 0) out.stable_at = static_cast<int>(out.iterations.size()) - 1;
  return out;
}

bool colorings_distinguish(const WLColoring& c1, const WLColoring& c2) {
  if (c1.table_id != c2.table_id)
    throw std::invalid_argument("colorings come from different color tables");
  if (c1.k != c2.k) return true;
  size_t common = std::min(c1.iterations.size(), c2.iterations.size());
  for (size_t it = 0; it < common; ++it)
    if (c1.histogram(it) != c2.histogram(it)) return true;
  // Equal histograms through the common horizon force equal stabilization:
  // a graph refining strictly further would change its cell-size multiset.
  return false;
}

}  // namespace phg
