#pragma once

#include <span>
#include <vector>

#include "lcrg/density.hpp"
#include "lcrg/model.hpp"

namespace lcrg {

/// Exact probability that no edge of S is present:
/// P(S cap E_p = empty) = (1 - alpha(S) p / L)^N, or 0 once alpha(S) p >= L.
/// Duplicate indices in S throw DomainError.
double prob_all_absent(const SimplexModel& model, std::span<const EdgeIndex> absent, double p);

/// Leading-order value of P(S absent, T present) with a multiplicative
/// error bracket [value e^-c, value e^c], where
///   c = 2 (|T|^2 / N + alpha(T) N p / L + alpha(S) |T| p / L).
/// The expression is asymptotic; `exact` is set only when T is empty.
struct BracketedProbability {
  double value;
  double lower;
  double upper;
  bool exact;

  bool contains(double x) const noexcept { return lower <= x && x <= upper; }
};

BracketedProbability prob_absent_present(const SimplexModel& model,
                                         std::span<const EdgeIndex> absent,
                                         std::span<const EdgeIndex> present, double p);

/// q = P(X_e <= p) = 1 - (1 - p/L)^N for the alpha = 1 simplex.
/// Throws DomainError when the model is not uniform.
double edge_prob_q(const SimplexModel& model, double p);

/// E(m) = q N, the expected number of edges of G_p for alpha = 1.
double expected_edge_count(const SimplexModel& model, double p);

/// Upper bound q N on Var(m) for alpha = 1 (valid for p <= L/2).
double edge_count_variance_bound(const SimplexModel& model, double p);

/// Isolation probabilities xi_v(p) = (1 - alpha_v p / N)^N.
class IsolationProfile {
 public:
  explicit IsolationProfile(const SimplexModel& model);

  std::size_t vertex_count() const noexcept { return vertex_alpha_.size(); }
  double xi(Vertex v, double p) const;
  /// Sum of xi_v(p) over all vertices; non-increasing in p.
  double total(double p) const;
  std::span<const double> vertex_alphas() const noexcept { return vertex_alpha_; }

 private:
  std::vector<double> vertex_alpha_;
  double dimension_;
};

/// Root p_0 of sum_v xi_v(p) = 1, found by bisection.
double solve_p0(const SimplexModel& model);

/// sigma_e^2 = E(X_e^2) = 2 L^2 / (alpha_e^2 (N + 1) (N + 2)), the second
/// moment of (L / alpha_e) Beta(1, N).
double sigma_simplex(const SimplexModel& model, EdgeIndex e);

enum class SeriesMode {
  /// Sum over every vertex subset; n <= 20.
  kExact,
  /// Sum over count vectors per distinct d value; at most 4 distinct values.
  kGrouped,
  /// Per-size terms from 1/d_S^2 = int_0^inf t e^{-t d_S} dt and elementary
  /// symmetric polynomials, stopped once three consecutive terms are each
  /// below 1e-12 of the partial sum.
  kTruncated,
};

/// sum_{k>=1} (k-1)!/D^k sum_{|S|=k} prod_{v in S} d_v / d_S^2.
/// Throws CapacityError when the mode cannot handle the weight profile.
double mst_series(const DecomposableWeights& weights, SeriesMode mode);

/// Number of distinct values among the d_v.
std::size_t distinct_weight_count(const DecomposableWeights& weights);

/// One grid point of the marginal bounds P(X <= p) in [p M_f / 2, p M_f].
struct BasicBoundRow {
  double p;
  double cdf;
  double upper;  ///< p M_f
  double lower;  ///< p M_f / 2
  bool upper_holds;
  bool lower_holds;
};

struct BasicBoundReport {
  double sd;
  double mode_density;
  std::vector<BasicBoundRow> rows;
  /// Grid points above the standard deviation, where the lower bound is
  /// not claimed. They are left out of `rows`.
  std::vector<double> skipped;

  bool all_hold() const noexcept;
};

BasicBoundReport check_basic_bounds(const DensityModel& model, EdgeIndex e,
                                    std::span<const double> grid);

}  // namespace lcrg
