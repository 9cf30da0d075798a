#pragma once

#include <variant>
#include <vector>

#include "lcrg/model.hpp"
#include "lcrg/rng.hpp"

namespace lcrg {

struct ProductExponential {
  EdgeSpace space;
  std::vector<double> rates;
};

struct OrthantBall {
  EdgeSpace space;
  double radius;
};

/// A down-monotone logconcave distribution on the positive orthant together
/// with the exact one-dimensional marginal of every coordinate.
///
/// Two spreads are exposed per axis: the second moment E(X_e^2) used to
/// scale thresholds, and the standard deviation used by the marginal
/// probability bounds P(X <= p) in [p M_f / 2, p M_f].
class DensityModel {
 public:
  using Kind = std::variant<SimplexModel, ProductExponential, OrthantBall>;

  explicit DensityModel(SimplexModel simplex);
  explicit DensityModel(ProductExponential exponential);
  explicit DensityModel(OrthantBall ball);

  const Kind& kind() const noexcept { return kind_; }
  const EdgeSpace& space() const noexcept;
  std::size_t dimension() const noexcept { return space().size(); }

  WeightVector sample(SeededRng& rng) const;

  /// E(X_e^2).
  double second_moment(EdgeIndex e) const;
  double mean(EdgeIndex e) const;
  double standard_deviation(EdgeIndex e) const;
  /// Maximum of the marginal density of X_e, attained at 0.
  double mode_density(EdgeIndex e) const;
  /// P(X_e <= p). Throws DomainError for p < 0.
  double marginal_cdf(EdgeIndex e, double p) const;

  double sigma_min() const;
  double sigma_max() const;

 private:
  Kind kind_;
};

/// P(X_e <= p) for the given model; see DensityModel::marginal_cdf.
double marginal_cdf(const DensityModel& model, EdgeIndex e, double p);

/// (1 - x)^power evaluated as exp(power * log1p(-x)), returning 0 once x >= 1.
double pow_one_minus(double x, double power) noexcept;

}  // namespace lcrg
