#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lcrg/density.hpp"
#include "lcrg/model.hpp"

namespace lcrg {

enum class ExperimentKind {
  kConnectivity,
  kMatching,
  kGiant,
  kDiameter,
  kHamilton,
  kMst,
  kAtsp,
  kMoments,
  kMarginals,
};

enum class ModelKind { kSimplex, kExponential, kOrthantBall };

enum class AlphaKind {
  kUniform,       ///< alpha_e = 1
  kBounded,       ///< alpha_e uniform on [1/M, M], drawn from alpha_seed
  kDecomposable,  ///< alpha_vw = d_v d_w
};

/// How the threshold values are produced. Derived schedules are resolved to
/// explicit p values by resolve_schedule() before any trial runs.
enum class ScheduleKind {
  kNone,            ///< mst / atsp: weights are used without thresholding
  kExplicit,        ///< p = values
  kConnectivity,    ///< p = (ln n + c) / n for c in values
  kP0Band,          ///< p = (1 - eps) p_0 and (1 + eps) p_0 for eps in values
  kDiameter,        ///< p = n^(theta - 1) for theta in values
  kScaledByN,       ///< p = c / n for c in values
  kSigmaMultiples,  ///< p = c sigma_max ln n / n for c in values
};

/// Flat key = value experiment description. See README for the schema.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kConnectivity;
  ModelKind model = ModelKind::kSimplex;
  std::size_t n = 0;

  AlphaKind alpha = AlphaKind::kUniform;
  double alpha_bound = 1.0;
  std::uint64_t alpha_seed = 1;
  /// Decomposable factors (cycled over vertices when shorter than n).
  std::vector<double> d;
  /// Row-symmetric head weights for atsp (cycled; default 1).
  std::vector<double> beta;
  std::optional<double> budget;
  double rate = 1.0;
  std::optional<double> radius;

  ScheduleKind schedule = ScheduleKind::kNone;
  std::vector<double> schedule_values;

  /// Vertex counts for atsp sweeps; defaults to {n}.
  std::vector<std::size_t> sizes;
  /// Coordinate observed by the marginals experiment.
  EdgeIndex edge = 0;

  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::string out;
};

/// Parses `key = value` lines; `#` starts a comment. Throws ConfigError on
/// unknown keys, malformed values, or conflicting schedules.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

/// Checks cross-field consistency. Throws ConfigError.
void validate(const ExperimentConfig& config);

std::string to_string(ExperimentKind kind);
ExperimentKind parse_kind(const std::string& text);

/// Simplex model described by the config (model must be simplex).
SimplexModel build_simplex(const ExperimentConfig& config);
/// Row-symmetric directed simplex on n vertices for atsp configs.
SimplexModel build_row_symmetric(const ExperimentConfig& config, std::size_t n);
DensityModel build_density(const ExperimentConfig& config);
DecomposableWeights build_decomposable(const ExperimentConfig& config);

/// Explicit p values of the config's schedule, in order.
std::vector<double> resolve_schedule(const ExperimentConfig& config);

}  // namespace lcrg
