#include "phg/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace phg {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return a.vertices < b.vertices;
}

}  // namespace

std::vector<double> FilteredComplex::critical_values() const {
  std::vector<double> vals;
  for (const auto& s : simplices)
    if (vals.empty() || s.value > vals.back()) vals.push_back(s.value);
  return vals;
}

FilteredComplex clique_complex(const Graph& g, const FiltrationAssignment& f, int k) {
  if (k < 1) throw std::invalid_argument("expansion dimension must be >= 1");
  if (f.vertex_values.size() != static_cast<size_t>(g.vertex_count()))
    throw std::invalid_argument("filtration misses vertex values (" +
                                std::to_string(f.vertex_values.size()) + " for " +
                                std::to_string(g.vertex_count()) + " vertices)");
  if (f.edge_values && f.edge_values->size() != static_cast<size_t>(g.edge_count()))
    throw std::invalid_argument("filtration misses edge values");

  FilteredComplex out;
  out.k_max = k;

  auto value_of = [&](const std::vector<int>& clique) {
    double val = f.vertex_values[clique[0]];
    for (int v : clique) val = std::max(val, f.vertex_values[v]);
    if (f.edge_values)
      for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
          val = std::max(val, (*f.edge_values)[g.edge_index(clique[i], clique[j])]);
    return val;
  };

  // Bounded clique enumeration: extend each clique only by higher-indexed
  // common neighbors.
  std::vector<int> clique;
  std::function<void(int)> grow = [&](int start) {
    if (!clique.empty()) out.simplices.push_back({clique, value_of(clique)});
    if (static_cast<int>(clique.size()) == k + 1) return;
    for (int v = start; v < g.vertex_count(); ++v) {
      bool joined = true;
      for (int u : clique)
        if (!g.has_edge(u, v)) {
          joined = false;
          break;
        }
      if (!joined) continue;
      clique.push_back(v);
      grow(v + 1);
      clique.pop_back();
    }
  };
  grow(0);

  std::sort(out.simplices.begin(), out.simplices.end(), simplex_order);
  return out;
}

FilteredComplex kwl_complex(const Graph& g, int k, WlFiltrationSession& session, int rounds) {
  auto weights = kwl_simplex_weights(g, k, session, rounds);
  FilteredComplex out;
  out.k_max = k - 1;
  out.simplices.reserve(weights.size());
  for (auto& [vertices, value] : weights) out.simplices.push_back({vertices, value});
  std::sort(out.simplices.begin(), out.simplices.end(), simplex_order);
  return out;
}

FilteredComplex kwl_complex(const Graph& g, int k) {
  WlFiltrationSession session;
  return kwl_complex(g, k, session);
}

long long euler_characteristic(const FilteredComplex& c) {
  long long chi = 0;
  for (const auto& s : c.simplices) chi += (s.dim() % 2 == 0) ? 1 : -1;
  return chi;
}

bool is_valid_filtration_order(const FilteredComplex& c) {
  std::map<std::vector<int>, size_t> position;
  for (size_t i = 0; i < c.simplices.size(); ++i) {
    if (i > 0 && !simplex_order(c.simplices[i - 1], c.simplices[i]) &&
        c.simplices[i - 1].vertices == c.simplices[i].vertices)
      return false;  // duplicate simplex
    if (i > 0 && simplex_order(c.simplices[i], c.simplices[i - 1])) return false;
    position[c.simplices[i].vertices] = i;
  }
  for (size_t i = 0; i < c.simplices.size(); ++i) {
    const auto& s = c.simplices[i];
    if (s.dim() == 0) continue;
    for (size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<int> face;
      for (size_t j = 0; j < s.vertices.size(); ++j)
        if (j != drop) face.push_back(s.vertices[j]);
      auto it = position.find(face);
      if (it == position.end() || it->second >= i) return false;
    }
  }
  return true;
}

}  // namespace phg
