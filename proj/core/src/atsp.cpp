#include "lcrg/atsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lcrg/errors.hpp"
#include "lcrg/samplers.hpp"

namespace lcrg {

CostMatrix::CostMatrix(std::size_t n, std::vector<double> costs)
    : n_(n), costs_(std::move(costs)) {
  if (n < 2) throw DomainError("cost matrix needs at least 2 vertices");
  if (costs_.size() != n * n) throw DomainError("cost matrix data must hold n*n entries");
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      double& c = costs_[i * n + j];
      if (i == j) {
        c = kNoEdge;
      } else if (!(c >= 0.0) || !std::isfinite(c)) {
        throw DomainError("off-diagonal costs must be finite and non-negative");
      }
    }
  }
}

CostMatrix::CostMatrix(const WeightVector& x) : n_(x.space().vertex_count()) {
  const auto& space = x.space();
  if (!space.is_directed()) throw DomainError("ATSP costs come from a directed edge space");
  costs_.assign(n_ * n_, kNoEdge);
  for (Vertex i = 0; i < n_; ++i) {
    for (Vertex j = 0; j < n_; ++j) {
      if (i != j) costs_[i * n_ + j] = x[space.index(i, j)];
    }
  }
}

double& CostMatrix::at(Vertex i, Vertex j) {
  if (i >= n_ || j >= n_ || i == j) throw DomainError("cost matrix entry out of range");
  return costs_[i * n_ + j];
}

AssignmentResult hungarian(const CostMatrix& costs) {
  const std::size_t n = costs.size();
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based potentials; column 0 is the virtual start of each augmentation.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<double> min_slack(n + 1);
  std::vector<char> used(n + 1);

  for (std::size_t row = 1; row <= n; ++row) {
    row_of[0] = row;
    std::size_t col0 = 0;
    std::fill(min_slack.begin(), min_slack.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[col0] = 1;
      const std::size_t i0 = row_of[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double slack = costs(i0 - 1, j - 1) - u[i0] - v[j];
        if (slack < min_slack[j]) {
          min_slack[j] = slack;
          way[j] = col0;
        }
        if (min_slack[j] < delta) {
          delta = min_slack[j];
          col1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_slack[j] -= delta;
        }
      }
      col0 = col1;
    } while (row_of[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      row_of[col0] = row_of[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  AssignmentResult result;
  result.successor.assign(n, 0);
  for (std::size_t j = 1; j <= n; ++j) result.successor[row_of[j] - 1] = j - 1;
  for (Vertex i = 0; i < n; ++i) result.cost += costs(i, result.successor[i]);

  std::vector<char> seen(n, 0);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    for (Vertex x = start; !seen[x]; x = result.successor[x]) {
      seen[x] = 1;
      cycle.push_back(x);
    }
    result.cycles.push_back(std::move(cycle));
  }
  std::stable_sort(result.cycles.begin(), result.cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return result;
}

double tour_cost(const CostMatrix& costs, const std::vector<Vertex>& order) {
  double total = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    total += costs(order[k], order[(k + 1) % order.size()]);
  }
  return total;
}

bool is_valid_tour(const std::vector<Vertex>& order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

PatchResult patch_traced(const AssignmentResult& assignment, const CostMatrix& costs) {
  const std::size_t n = costs.size();
  if (assignment.successor.size() != n || assignment.cycles.empty()) {
    throw DomainError("assignment does not match the cost matrix");
  }
  std::vector<Vertex> succ = assignment.successor;
  std::vector<Vertex> merged = assignment.cycles.front();
  PatchResult result;

  for (std::size_t i = assignment.cycles.size() - 1; i >= 1; --i) {
    const auto& cycle = assignment.cycles[i];
    PatchStep best{0, 0, 0, 0, std::numeric_limits<double>::infinity(), 0.0, i};
    for (Vertex a : merged) {
      const Vertex b = succ[a];
      for (Vertex c : cycle) {
        const Vertex d = succ[c];
        const double added = costs(a, d) + costs(c, b);
        if (added < best.added_cost) {
          best.a = a;
          best.b = b;
          best.c = c;
          best.d = d;
          best.added_cost = added;
        }
      }
    }
    best.cost_increase = best.added_cost - costs(best.a, best.b) - costs(best.c, best.d);
    succ[best.a] = best.d;
    succ[best.c] = best.b;
    merged.insert(merged.end(), cycle.begin(), cycle.end());
    result.steps.push_back(best);
  }

  result.tour.order.reserve(n);
  Vertex x = 0;
  do {
    result.tour.order.push_back(x);
    x = succ[x];
  } while (x != 0 && result.tour.order.size() <= n);
  if (!is_valid_tour(result.tour.order, n)) {
    throw std::logic_error("patching did not produce a Hamilton cycle");
  }
  result.tour.cost = tour_cost(costs, result.tour.order);
  return result;
}

Tour patch(const AssignmentResult& assignment, const CostMatrix& costs) {
  return patch_traced(assignment, costs).tour;
}

Tour held_karp(const CostMatrix& costs) {
  const std::size_t n = costs.size();
  if (n > kHeldKarpMaxVertices) {
    throw CapacityError("Held-Karp supports n <= 13, got n = " + std::to_string(n));
  }
  // Paths start at vertex 0; masks range over vertices 1..n-1 (bit v-1).
  const std::size_t m = n - 1;
  const std::size_t masks = std::size_t{1} << m;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> best(masks * m, inf);
  std::vector<unsigned char> parent(masks * m, 0);
  for (std::size_t v = 0; v < m; ++v) best[(std::size_t{1} << v) * m + v] = costs(0, v + 1);

  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (std::size_t last = 0; last < m; ++last) {
      if (!(mask >> last & 1u)) continue;
      const double here = best[mask * m + last];
      if (here == inf) continue;
      for (std::size_t next = 0; next < m; ++next) {
        if (mask >> next & 1u) continue;
        const std::size_t to = (mask | (std::size_t{1} << next)) * m + next;
        const double cand = here + costs(last + 1, next + 1);
        if (cand < best[to]) {
          best[to] = cand;
          parent[to] = static_cast<unsigned char>(last);
        }
      }
    }
  }

  const std::size_t full = masks - 1;
  double opt = inf;
  std::size_t last = 0;
  for (std::size_t v = 0; v < m; ++v) {
    const double cand = best[full * m + v] + costs(v + 1, 0);
    if (cand < opt) {
      opt = cand;
      last = v;
    }
  }

  Tour tour;
  tour.order.resize(n);
  tour.order[0] = 0;
  std::size_t mask = full;
  for (std::size_t pos = n - 1; pos >= 1; --pos) {
    tour.order[pos] = last + 1;
    const std::size_t prev = parent[mask * m + last];
    mask &= ~(std::size_t{1} << last);
    last = prev;
  }
  tour.cost = tour_cost(costs, tour.order);
  return tour;
}

CostMatrix sample_row_symmetric_costs(const SimplexModel& model, SeededRng& rng) {
  return CostMatrix(sample_row_symmetric(model, rng));
}

}  // namespace lcrg
