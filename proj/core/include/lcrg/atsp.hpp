#pragma once

#include <iosfwd>
#include <limits>
#include <vector>

#include "lcrg/model.hpp"
#include "lcrg/rng.hpp"

namespace lcrg {

/// Dense n x n ATSP cost matrix; the diagonal holds +inf so that no
/// assignment can map a vertex to itself.
class CostMatrix {
 public:
  static constexpr double kNoEdge = std::numeric_limits<double>::infinity();

  /// Row-major n x n data; diagonal entries are overwritten with +inf.
  CostMatrix(std::size_t n, std::vector<double> costs);
  /// Reads x on a directed edge space as X_ij = x[index(i, j)].
  explicit CostMatrix(const WeightVector& x);

  std::size_t size() const noexcept { return n_; }
  double operator()(Vertex i, Vertex j) const noexcept { return costs_[i * n_ + j]; }
  double& at(Vertex i, Vertex j);

 private:
  std::size_t n_;
  std::vector<double> costs_;
};

/// Optimal assignment a with its cycle decomposition, longest cycle first.
/// Each cycle lists vertices in the order v, a(v), a(a(v)), ...
struct AssignmentResult {
  std::vector<Vertex> successor;
  double cost = 0.0;
  std::vector<std::vector<Vertex>> cycles;
};

/// Directed Hamilton cycle given as a vertex sequence starting at 0.
struct Tour {
  std::vector<Vertex> order;
  double cost = 0.0;
};

/// Minimum-cost assignment by the O(n^3) shortest augmenting path method
/// with row/column potentials.
AssignmentResult hungarian(const CostMatrix& costs);

/// One merge C_1 <- C_1 (+) C_i: remove (a, b) from C_1 and (c, d) from C_i,
/// add (a, d) and (c, b).
struct PatchStep {
  Vertex a, b, c, d;
  /// X_ad + X_cb, the quantity the merge minimizes.
  double added_cost;
  /// X_ad + X_cb - X_ab - X_cd.
  double cost_increase;
  std::size_t cycles_after;
};

struct PatchResult {
  Tour tour;
  std::vector<PatchStep> steps;
};

/// Patches the assignment's cycles into one tour, merging C_k, C_{k-1}, ...,
/// C_2 into C_1 in that order. Each merge scans all |C_1| x |C_i| edge pairs.
PatchResult patch_traced(const AssignmentResult& assignment, const CostMatrix& costs);
Tour patch(const AssignmentResult& assignment, const CostMatrix& costs);

/// Largest n accepted by held_karp().
inline constexpr std::size_t kHeldKarpMaxVertices = 13;

/// Exact optimum by bitmask dynamic programming. Throws CapacityError for
/// n > 13.
Tour held_karp(const CostMatrix& costs);

/// Cost of a vertex sequence read as a closed tour.
double tour_cost(const CostMatrix& costs, const std::vector<Vertex>& order);

/// True when order visits every vertex exactly once.
bool is_valid_tour(const std::vector<Vertex>& order, std::size_t n);

/// Row-symmetric instance: samples the directed simplex of `model`, which
/// must have alpha_(i,j) depending only on j.
CostMatrix sample_row_symmetric_costs(const SimplexModel& model, SeededRng& rng);

/// CSV form: a line `n=<int>` followed by n lines of n comma-separated
/// values, `inf` on the diagonal.
void write_cost_matrix(std::ostream& out, const CostMatrix& costs);
/// Throws ConfigError on malformed input.
CostMatrix read_cost_matrix(std::istream& in);

}  // namespace lcrg
