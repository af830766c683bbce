#include "phg/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace phg {

void DiscreteMeasure::validate() const {
  if (support.size() != mass.size())
    throw std::invalid_argument("measure support/mass size mismatch");
  double total = 0.0;
  for (double m : mass) {
    if (m < 0.0) throw std::invalid_argument("negative mass");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("masses sum to " + std::to_string(total) + ", expected 1");
  std::set<int> ids(support.begin(), support.end());
  if (ids.size() != support.size())
    throw std::invalid_argument("duplicate support ids");
}

void CostMatrix::validate(size_t rows, size_t cols) const {
  if (costs.size() != rows) throw std::invalid_argument("cost matrix row count mismatch");
  for (const auto& row : costs) {
    if (row.size() != cols) throw std::invalid_argument("cost matrix column count mismatch");
    for (double c : row)
      if (!(c >= 0.0) || !std::isfinite(c))
        throw std::invalid_argument("cost entries must be finite and nonnegative");
  }
}

std::optional<std::pair<long long, long long>> rationalize(double x, long long max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  double sign = x < 0 ? -1.0 : 1.0;
  double v = std::abs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fa = std::floor(v);
    if (fa > static_cast<double>(max_den)) break;
    long long a = static_cast<long long>(fa);
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::abs(std::abs(x) - approx) <= 1e-13 * std::max(1.0, std::abs(x))) break;
    double frac = v - fa;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) return std::nullopt;
  double approx = static_cast<double>(p1) / static_cast<double>(q1);
  if (std::abs(std::abs(x) - approx) > 1e-11) return std::nullopt;
  return std::make_pair(static_cast<long long>(sign) * p1, q1);
}

namespace {

// Successive shortest paths on the bipartite transport network. Costs drive
// the path selection; supply amounts only set augmentation sizes, so with
// integer unit supplies the result is exact.
double min_cost_transport(std::vector<double> supply, std::vector<double> demand,
                          const std::vector<std::vector<double>>& cost) {
  const size_t p = supply.size(), q = demand.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> flow(p, std::vector<double>(q, 0.0));
  std::vector<double> pi_a(p, 0.0), pi_b(q, 0.0);

  auto positive = [](double x) { return x > 1e-15; };

  for (;;) {
    bool supply_left = std::any_of(supply.begin(), supply.end(), positive);
    if (!supply_left) break;

    std::vector<double> dist_a(p, inf), dist_b(q, inf);
    std::vector<bool> done_a(p, false), done_b(q, false);
    std::vector<int> parent_b(q, -1);  // A-node used to reach B-node j
    std::vector<int> parent_a(p, -1);  // B-node used to reach A-node i
    for (size_t i = 0; i < p; ++i)
      if (positive(supply[i])) dist_a[i] = 0.0;

    for (;;) {
      int best = -1;
      bool best_is_a = true;
      double best_d = inf;
      for (size_t i = 0; i < p; ++i)
        if (!done_a[i] && dist_a[i] < best_d) {
          best_d = dist_a[i];
          best = static_cast<int>(i);
          best_is_a = true;
        }
      for (size_t j = 0; j < q; ++j)
        if (!done_b[j] && dist_b[j] < best_d) {
          best_d = dist_b[j];
          best = static_cast<int>(j);
          best_is_a = false;
        }
      if (best < 0) break;
      if (best_is_a) {
        size_t i = best;
        done_a[i] = true;
        for (size_t j = 0; j < q; ++j) {
          double rc = cost[i][j] + pi_a[i] - pi_b[j];
          if (dist_a[i] + rc < dist_b[j] - 1e-15) {
            dist_b[j] = dist_a[i] + rc;
            parent_b[j] = static_cast<int>(i);
          }
        }
      } else {
        size_t j = best;
        done_b[j] = true;
        for (size_t i = 0; i < p; ++i) {
          if (!positive(flow[i][j])) continue;
          double rc = -cost[i][j] + pi_b[j] - pi_a[i];
          if (dist_b[j] + rc < dist_a[i] - 1e-15) {
            dist_a[i] = dist_b[j] + rc;
            parent_a[i] = static_cast<int>(j);
          }
        }
      }
    }

    int sink = -1;
    double sink_d = inf;
    for (size_t j = 0; j < q; ++j)
      if (positive(demand[j]) && dist_b[j] < sink_d) {
        sink_d = dist_b[j];
        sink = static_cast<int>(j);
      }
    if (sink < 0) throw std::runtime_error("transport network is infeasible");

    for (size_t i = 0; i < p; ++i)
      if (dist_a[i] < inf) pi_a[i] += std::min(dist_a[i], sink_d);
    for (size_t j = 0; j < q; ++j)
      if (dist_b[j] < inf) pi_b[j] += std::min(dist_b[j], sink_d);

    // Trace the augmenting path back to a source.
    std::vector<std::pair<int, int>> fwd_arcs;  // (i, j) pushed forward
    std::vector<std::pair<int, int>> bwd_arcs;  // (i, j) pushed back
    int j = sink;
    int source = -1;
    for (;;) {
      int i = parent_b[j];
      fwd_arcs.push_back({i, j});
      if (parent_a[i] < 0) {
        source = i;
        break;
      }
      j = parent_a[i];
      bwd_arcs.push_back({i, j});
    }

    double amount = std::min(supply[source], demand[sink]);
    for (auto& [bi, bj] : bwd_arcs) amount = std::min(amount, flow[bi][bj]);
    for (auto& [fi, fj] : fwd_arcs) flow[fi][fj] += amount;
    for (auto& [bi, bj] : bwd_arcs) flow[bi][bj] -= amount;
    supply[source] -= amount;
    demand[sink] -= amount;
  }

  double total = 0.0;
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < q; ++j) total += flow[i][j] * cost[i][j];
  return total;
}

// Smallest common denominator that turns every mass into an integer count,
// if one exists within the cap.
std::optional<long long> common_denominator(const DiscreteMeasure& m) {
  long long lcm = 1;
  const long long cap = 1000000000LL;
  for (double x : m.mass) {
    auto r = rationalize(x);
    if (!r) return std::nullopt;
    long long den = r->second;
    long long g = std::gcd(lcm, den);
    if (lcm / g > cap / den) return std::nullopt;
    lcm = lcm / g * den;
  }
  return lcm;
}

}  // namespace

double wasserstein1(const DiscreteMeasure& a, const DiscreteMeasure& b, const CostMatrix& c) {
  a.validate();
  b.validate();
  c.validate(a.support.size(), b.support.size());
  double ta = std::accumulate(a.mass.begin(), a.mass.end(), 0.0);
  double tb = std::accumulate(b.mass.begin(), b.mass.end(), 0.0);
  if (std::abs(ta - tb) > 1e-12)
    throw std::invalid_argument("transport mass mismatch: " + std::to_string(ta) + " vs " +
                                std::to_string(tb));

  auto da = common_denominator(a);
  auto db = common_denominator(b);
  if (da && db) {
    long long g = std::gcd(*da, *db);
    long long scale = *da / g * *db;
    std::vector<double> supply(a.mass.size()), demand(b.mass.size());
    double sa = 0, sb = 0;
    for (size_t i = 0; i < a.mass.size(); ++i)
      sa += supply[i] = std::llround(a.mass[i] * static_cast<double>(scale));
    for (size_t j = 0; j < b.mass.size(); ++j)
      sb += demand[j] = std::llround(b.mass[j] * static_cast<double>(scale));
    if (sa == sb)
      return min_cost_transport(std::move(supply), std::move(demand), c.costs) /
             static_cast<double>(scale);
  }
  // No exact common denominator: solve on the raw masses.
  return min_cost_transport(a.mass, b.mass, c.costs);
}

DiscreteMeasure random_walk_measure(const Graph& g, int u, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0,1]");
  int deg = g.degree(u);
  if (deg == 0 && alpha < 1.0)
    throw std::invalid_argument("vertex " + std::to_string(u) +
                                " has degree 0; the walk measure is undefined for alpha < 1");
  DiscreteMeasure m;
  if (alpha > 0.0) {
    m.support.push_back(u);
    m.mass.push_back(alpha);
  }
  if (alpha < 1.0)
    for (int w : g.neighbors(u)) {
      m.support.push_back(w);
      m.mass.push_back((1.0 - alpha) / deg);
    }
  return m;
}

}  // namespace phg
