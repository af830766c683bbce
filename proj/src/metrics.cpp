#include "phg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace phg {

namespace {

struct Point {
  double birth, death;
};

void expand(const PersistenceDiagram& d, std::vector<Point>& finite, std::vector<double>& births) {
  for (const auto& p : d.points)
    for (long long i = 0; i < p.multiplicity; ++i) {
      if (p.essential)
        births.push_back(p.birth);
      else
        finite.push_back({p.birth, p.death});
    }
}

double linf(const Point& a, const Point& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diagonal_gap(const Point& p) { return (p.death - p.birth) / 2.0; }

// Perfect-matching feasibility at radius r in the augmented bipartite graph:
// left = P + diagonal copies of Q, right = Q + diagonal copies of P. A point
// pairs with a point within r, or with its diagonal copy when its gap is
// within r; diagonal copies pair with each other freely.
bool feasible(const std::vector<Point>& p, const std::vector<Point>& q, double r) {
  size_t np = p.size(), nq = q.size();
  size_t total = np + nq;
  std::vector<std::vector<int>> adj(total);
  for (size_t i = 0; i < np; ++i) {
    for (size_t j = 0; j < nq; ++j)
      if (linf(p[i], q[j]) <= r) adj[i].push_back(static_cast<int>(j));
    if (diagonal_gap(p[i]) <= r) adj[i].push_back(static_cast<int>(nq + i));
  }
  for (size_t j = 0; j < nq; ++j) {
    auto& row = adj[np + j];
    if (diagonal_gap(q[j]) <= r) row.push_back(static_cast<int>(j));
    for (size_t i = 0; i < np; ++i) row.push_back(static_cast<int>(nq + i));
  }

  std::vector<int> match_left(total, -1), match_right(total, -1);
  std::vector<int> visited(total, -1);
  std::function<bool(int, int)> augment = [&](int u, int stamp) {
    for (int v : adj[u]) {
      if (visited[v] == stamp) continue;
      visited[v] = stamp;
      if (match_right[v] < 0 || augment(match_right[v], stamp)) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };

  int matched = 0;
  for (size_t u = 0; u < total; ++u)
    if (augment(static_cast<int>(u), static_cast<int>(u))) ++matched;
  return matched == static_cast<int>(total);
}

double finite_bottleneck(const std::vector<Point>& p, const std::vector<Point>& q) {
  if (p.empty() && q.empty()) return 0.0;
  std::vector<double> candidates{0.0};
  for (const auto& a : p) {
    candidates.push_back(diagonal_gap(a));
    for (const auto& b : q) candidates.push_back(linf(a, b));
  }
  for (const auto& b : q) candidates.push_back(diagonal_gap(b));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  size_t lo = 0, hi = candidates.size() - 1;
  if (!feasible(p, q, candidates[hi]))
    throw std::logic_error("bottleneck matching infeasible at maximal radius");
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (feasible(p, q, candidates[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace

double bottleneck_distance(const PersistenceDiagram& d1, const PersistenceDiagram& d2) {
  if (d1.dim != d2.dim)
    throw std::invalid_argument("bottleneck distance across different homology dimensions");

  std::vector<Point> p, q;
  std::vector<double> ess1, ess2;
  expand(d1, p, ess1);
  expand(d2, q, ess2);

  if (ess1.size() != ess2.size()) return std::numeric_limits<double>::infinity();
  std::sort(ess1.begin(), ess1.end());
  std::sort(ess2.begin(), ess2.end());
  double essential_part = 0.0;
  for (size_t i = 0; i < ess1.size(); ++i)
    essential_part = std::max(essential_part, std::abs(ess1[i] - ess2[i]));

  return std::max(essential_part, finite_bottleneck(p, q));
}

bool diagrams_equal(const PersistenceDiagram& d1, const PersistenceDiagram& d2, double tol) {
  if (d1.dim != d2.dim) return false;

  auto expand_all = [](const PersistenceDiagram& d) {
    std::vector<std::pair<bool, Point>> pts;  // (essential, point)
    for (const auto& p : d.points)
      for (long long i = 0; i < p.multiplicity; ++i)
        pts.push_back({p.essential, {p.birth, p.essential ? 0.0 : p.death}});
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return !a.first;
      if (a.second.birth != b.second.birth) return a.second.birth < b.second.birth;
      return a.second.death < b.second.death;
    });
    return pts;
  };

  auto a = expand_all(d1), b = expand_all(d2);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].first != b[i].first) return false;
    if (std::abs(a[i].second.birth - b[i].second.birth) > tol) return false;
    if (!a[i].first && std::abs(a[i].second.death - b[i].second.death) > tol) return false;
  }
  return true;
}

bool distinguishes(const std::vector<PersistenceDiagram>& diags1,
                   const std::vector<PersistenceDiagram>& diags2, double threshold) {
  return separating_dimension(diags1, diags2, threshold) >= 0;
}

int separating_dimension(const std::vector<PersistenceDiagram>& diags1,
                         const std::vector<PersistenceDiagram>& diags2, double threshold) {
  size_t dims = std::max(diags1.size(), diags2.size());
  for (size_t d = 0; d < dims; ++d) {
    PersistenceDiagram empty;
    empty.dim = static_cast<int>(d);
    const PersistenceDiagram& a = d < diags1.size() ? diags1[d] : empty;
    const PersistenceDiagram& b = d < diags2.size() ? diags2[d] : empty;
    if (bottleneck_distance(a, b) > threshold) return static_cast<int>(d);
  }
  return -1;
}

}  // namespace phg
