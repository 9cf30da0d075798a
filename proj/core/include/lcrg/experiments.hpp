#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "lcrg/config.hpp"
#include "lcrg/density.hpp"
#include "lcrg/oracle.hpp"
#include "lcrg/statistics.hpp"

namespace lcrg {

/// Outcome of one trial. Optional fields are written as empty CSV cells.
struct TrialRecord {
  std::size_t p_index = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  /// Threshold; absent for mst and atsp.
  std::optional<double> p;
  /// Vertex count of the sampled instance.
  std::size_t n = 0;
  /// 0/1 for predicate kinds, a real statistic otherwise.
  double outcome = 0.0;

  std::optional<std::size_t> edges;
  std::optional<std::size_t> components;
  std::optional<double> largest_fraction;
  /// kInfiniteDiameter when disconnected.
  std::optional<std::size_t> diameter;
  std::optional<double> mst_weight;
  std::optional<double> assignment_cost;
  std::optional<double> tour_cost;
  std::optional<double> optimal_cost;
  std::optional<std::size_t> cycles;
};

/// Aggregate over the trials sharing one p index.
struct SummaryRow {
  std::size_t p_index = 0;
  std::optional<double> p;
  std::size_t n = 0;
  /// Set for predicate kinds only.
  std::optional<Proportion> frequency;
  MeanEstimate mean;
  /// Most frequent diameter (ties go to the smaller value).
  std::optional<std::size_t> mode;
  /// Oracle or limit value the row is compared against, when one exists.
  std::optional<double> theory;
};

struct SweepResult {
  ExperimentKind kind;
  std::vector<double> schedule;
  std::vector<TrialRecord> records;
  std::vector<SummaryRow> summary;
};

/// Seed of trial `trial` at schedule position `p_index`.
std::uint64_t trial_seed(std::uint64_t base, std::size_t p_index, std::size_t trial) noexcept;

/// Mean number of cycles of a uniformly random derangement of n elements,
/// about H_n - 1. Zero for n < 2.
double expected_derangement_cycles(std::size_t n) noexcept;

/// True for kinds whose outcome is a 0/1 predicate.
bool is_predicate_kind(ExperimentKind kind) noexcept;

/// Validates the config, resolves its schedule and runs every trial.
/// Records are ordered by (p index, trial) whatever the worker count.
SweepResult run_sweep(const ExperimentConfig& config);

/// Header row, one line per record, then `#summary,` lines.
void write_csv(std::ostream& out, const SweepResult& result);

/// Runs `trials` threshold trials per p and evaluates `kind` on each graph.
/// Used by run_sweep and the dedicated experiments below.
std::vector<TrialRecord> run_threshold_trials(const DensityModel& model, ExperimentKind kind,
                                              std::span<const double> ps, std::size_t trials,
                                              std::uint64_t seed, std::size_t workers = 1,
                                              EdgeIndex observed_edge = 0);

struct LimitLawRow {
  double c;
  double p;
  Proportion frequency;
  /// e^{-e^{-c}}
  double theory;
};

/// Connectivity frequency at p = (ln n + c)/n for alpha = 1.
std::vector<LimitLawRow> connectivity_limit_experiment(std::size_t n, std::span<const double> cs,
                                                       std::size_t trials, std::uint64_t seed,
                                                       std::size_t workers = 1);

struct TransitionResult {
  double p0;
  double eps;
  Proportion below;
  Proportion above;
  /// Effective bound M of the weights and whether M <= (ln n)^{1/4}.
  double bound;
  bool hypothesis_ok;
};

/// Connectivity frequency at (1 - eps) p_0 and (1 + eps) p_0. Throws
/// ConfigError unless 0 < eps < 1.
TransitionResult threshold_transition_experiment(const SimplexModel& model, double eps,
                                                 std::size_t trials, std::uint64_t seed,
                                                 std::size_t workers = 1);

struct MstExperimentResult {
  MeanEstimate monte_carlo;
  double series;
  SeriesMode mode;
  /// |mean - series| / series
  double relative_gap;
};

/// Series mode used for a weight profile: grouped for at most 4 distinct
/// values, else exact for n <= 20. Throws ConfigError otherwise.
SeriesMode mst_series_mode(const DecomposableWeights& weights);

/// Mean MST weight over simplex draws with alpha_vw = d_v d_w and L = N.
MstExperimentResult mst_experiment(const DecomposableWeights& weights, std::size_t trials,
                                   std::uint64_t seed, std::size_t workers = 1);

struct AtspRow {
  std::size_t n;
  MeanEstimate tour_over_assignment;
  /// Only for n <= kHeldKarpMaxVertices.
  std::optional<MeanEstimate> tour_over_optimum;
  MeanEstimate cycles;
  /// Expected cycle count of a uniform random derangement of n vertices.
  double expected_cycles;
  /// Effective bound M of the beta profile.
  double bound;
  bool assignment_never_above_optimum = true;
  bool tour_never_below_optimum = true;
};

/// Patching experiment on row-symmetric instances. `beta` is cycled over
/// the vertices; empty means beta = 1.
std::vector<AtspRow> atsp_experiment(std::span<const double> beta,
                                     std::span<const std::size_t> sizes, std::size_t trials,
                                     std::uint64_t seed, std::size_t workers = 1);

}  // namespace lcrg
