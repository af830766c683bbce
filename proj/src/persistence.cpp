#include "phg/persistence.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace phg {

namespace {

bool point_order(const DiagramPoint& a, const DiagramPoint& b) {
  if (a.essential != b.essential) return !a.essential;  // finite first
  if (a.birth != b.birth) return a.birth < b.birth;
  if (!a.essential && a.death != b.death) return a.death < b.death;
  return false;
}

bool same_location(const DiagramPoint& a, const DiagramPoint& b) {
  if (a.essential != b.essential) return false;
  if (a.birth != b.birth) return false;
  return a.essential || a.death == b.death;
}

}  // namespace

long long PersistenceDiagram::total_multiplicity() const {
  long long total = 0;
  for (const auto& p : points) total += p.multiplicity;
  return total;
}

long long PersistenceDiagram::essential_multiplicity() const {
  long long total = 0;
  for (const auto& p : points)
    if (p.essential) total += p.multiplicity;
  return total;
}

void PersistenceDiagram::canonicalize() {
  std::sort(points.begin(), points.end(), point_order);
  std::vector<DiagramPoint> merged;
  for (const auto& p : points) {
    if (p.multiplicity <= 0) throw std::invalid_argument("nonpositive multiplicity");
    if (!p.essential && p.death < p.birth)
      throw std::invalid_argument("death before birth");
    if (!merged.empty() && same_location(merged.back(), p))
      merged.back().multiplicity += p.multiplicity;
    else
      merged.push_back(p);
  }
  points = std::move(merged);
}

UnionFind::UnionFind(int n) : parent_(n), size_(n, 1), components_(n) {
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

int UnionFind::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --components_;
  return true;
}

std::pair<std::vector<int>, int> connected_components(const Graph& g) {
  UnionFind uf(g.vertex_count());
  for (auto& [u, v] : g.edges()) uf.unite(u, v);
  std::vector<int> ids(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) ids[v] = uf.find(v);
  return {std::move(ids), uf.component_count()};
}

PersistenceDiagram persistence_dim0(const FilteredComplex& c) {
  // Representative component data is tracked on union-find roots: birth
  // value and the filtration position of the creating vertex.
  int n = 0;
  for (const auto& s : c.simplices)
    if (s.dim() == 0) ++n;

  std::map<int, int> vertex_slot;  // vertex id -> creation slot
  UnionFind uf(n);
  std::vector<double> birth(n);
  std::vector<size_t> creator(n);

  PersistenceDiagram d0;
  d0.dim = 0;

  int next_slot = 0;
  for (size_t pos = 0; pos < c.simplices.size(); ++pos) {
    const auto& s = c.simplices[pos];
    if (s.dim() == 0) {
      int slot = next_slot++;
      vertex_slot[s.vertices[0]] = slot;
      birth[slot] = s.value;
      creator[slot] = pos;
    } else if (s.dim() == 1) {
      int a = uf.find(vertex_slot.at(s.vertices[0]));
      int b = uf.find(vertex_slot.at(s.vertices[1]));
      if (a == b) continue;  // creator edge, closes a cycle
      // Elder rule: the younger component dies; birth ties break by the
      // later creator position.
      int dies = (birth[a] != birth[b]) ? (birth[a] > birth[b] ? a : b)
                                        : (creator[a] > creator[b] ? a : b);
      int lives = dies == a ? b : a;
      d0.points.push_back({birth[dies], s.value, false, 1});
      uf.unite(a, b);
      int root = uf.find(lives);
      birth[root] = birth[lives];
      creator[root] = creator[lives];
    }
  }

  std::vector<bool> seen(n, false);
  for (int slot = 0; slot < n; ++slot) {
    int root = uf.find(slot);
    if (seen[root]) continue;
    seen[root] = true;
    d0.points.push_back({birth[root], 0.0, true, 1});
  }
  d0.canonicalize();
  return d0;
}

BoundaryMatrix boundary_matrix(const FilteredComplex& c) {
  size_t m = c.simplices.size();
  std::map<std::vector<int>, int> position;
  for (size_t i = 0; i < m; ++i) position[c.simplices[i].vertices] = static_cast<int>(i);

  BoundaryMatrix out;
  out.columns.resize(m);
  for (size_t j = 0; j < m; ++j) {
    const auto& s = c.simplices[j];
    if (s.dim() == 0) continue;
    auto& col = out.columns[j];
    for (size_t drop = 0; drop < s.vertices.size(); ++drop) {
      std::vector<int> face;
      face.reserve(s.vertices.size() - 1);
      for (size_t t = 0; t < s.vertices.size(); ++t)
        if (t != drop) face.push_back(s.vertices[t]);
      auto it = position.find(face);
      if (it == position.end()) throw std::invalid_argument("complex is not closed under faces");
      col.push_back(it->second);
    }
    std::sort(col.begin(), col.end());
  }
  return out;
}

std::vector<PersistenceDiagram> persistence_reduction(const FilteredComplex& c) {
  size_t m = c.simplices.size();
  std::vector<std::vector<int>> cols = boundary_matrix(c).columns;

  std::vector<int> owner(m, -1);  // low index -> column that owns it
  std::vector<int> partner(m, -1);
  std::vector<int> scratch;
  for (size_t j = 0; j < m; ++j) {
    auto& col = cols[j];
    while (!col.empty() && owner[col.back()] >= 0) {
      const auto& other = cols[owner[col.back()]];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner[col.back()] = static_cast<int>(j);
      partner[col.back()] = static_cast<int>(j);
      partner[j] = col.back();
    }
  }

  std::vector<PersistenceDiagram> diagrams(c.k_max + 1);
  for (int d = 0; d <= c.k_max; ++d) diagrams[d].dim = d;

  for (size_t i = 0; i < m; ++i) {
    if (!cols[i].empty()) continue;  // destroyers never create
    int d = c.simplices[i].dim();
    if (d > c.k_max) continue;
    if (partner[i] >= 0)
      diagrams[d].points.push_back(
          {c.simplices[i].value, c.simplices[partner[i]].value, false, 1});
    else
      diagrams[d].points.push_back({c.simplices[i].value, 0.0, true, 1});
  }
  for (auto& d : diagrams) d.canonicalize();
  return diagrams;
}

BettiVector betti_numbers(const FilteredComplex& c) {
  auto diagrams = persistence_reduction(c);
  BettiVector b;
  b.betti.reserve(diagrams.size());
  for (const auto& d : diagrams) b.betti.push_back(d.essential_multiplicity());
  return b;
}

long long persistent_betti(const std::vector<PersistenceDiagram>& diags, int dim, int i, int j,
                           const std::vector<double>& values) {
  if (i > j) throw std::out_of_range("persistent Betti requires i <= j");
  if (i < 0 || j >= static_cast<int>(values.size()))
    throw std::out_of_range("value index out of range");
  if (dim < 0 || dim >= static_cast<int>(diags.size())) return 0;

  double ai = values[i], aj = values[j];
  long long count = 0;
  for (const auto& p : diags[dim].points)
    if (p.birth <= ai && (p.essential || p.death > aj)) count += p.multiplicity;
  return count;
}

int diameter_bound(const FilteredComplex& c, DiameterVariant variant) {
  if (c.k_max < 1) throw std::invalid_argument("diameter bound needs edges in the complex");
  std::map<int, int> vertex_slot;
  int n = 0;
  for (const auto& s : c.simplices)
    if (s.dim() == 0) vertex_slot[s.vertices[0]] = n++;

  UnionFind uf(n);
  int destroyers = 0;
  for (const auto& s : c.simplices) {
    if (s.dim() != 1) continue;
    bool merged = uf.unite(vertex_slot.at(s.vertices[0]), vertex_slot.at(s.vertices[1]));
    if (merged) {
      ++destroyers;
    } else if (variant == DiameterVariant::literal) {
      break;  // stop at the first creator edge
    }
  }
  return destroyers;
}

}  // namespace phg
