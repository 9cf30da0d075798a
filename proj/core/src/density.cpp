#include "lcrg/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "lcrg/errors.hpp"
#include "lcrg/samplers.hpp"

namespace lcrg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_index(const EdgeSpace& space, EdgeIndex e) {
  if (e >= space.size()) throw DomainError("coordinate index out of range");
}

}  // namespace

double pow_one_minus(double x, double power) noexcept {
  if (x >= 1.0) return 0.0;
  return std::exp(power * std::log1p(-x));
}

DensityModel::DensityModel(SimplexModel simplex) : kind_(std::move(simplex)) {}

DensityModel::DensityModel(ProductExponential exponential) : kind_(std::move(exponential)) {
  const auto& m = std::get<ProductExponential>(kind_);
  if (m.rates.size() != m.space.size()) throw DomainError("one rate per coordinate is required");
  for (double r : m.rates) {
    if (!(r > 0.0)) throw DomainError("exponential rates must be positive");
  }
}

DensityModel::DensityModel(OrthantBall ball) : kind_(std::move(ball)) {
  if (!(std::get<OrthantBall>(kind_).radius > 0.0)) {
    throw DomainError("ball radius must be positive");
  }
}

const EdgeSpace& DensityModel::space() const noexcept {
  return std::visit(Overloaded{[](const SimplexModel& m) -> const EdgeSpace& { return m.space(); },
                               [](const ProductExponential& m) -> const EdgeSpace& { return m.space; },
                               [](const OrthantBall& m) -> const EdgeSpace& { return m.space; }},
                    kind_);
}

WeightVector DensityModel::sample(SeededRng& rng) const {
  return std::visit(
      Overloaded{[&](const SimplexModel& m) { return sample_simplex(m, rng); },
                 [&](const ProductExponential& m) {
                   return sample_product_exponential(m.rates, m.space, rng);
                 },
                 [&](const OrthantBall& m) { return sample_orthant_ball(m.radius, m.space, rng); }},
      kind_);
}

// Simplex marginal: X_e = (L / alpha_e) B with B ~ Beta(1, N).
// Orthant-ball marginal: (X_e / R)^2 ~ Beta(1/2, (N+1)/2).

double DensityModel::second_moment(EdgeIndex e) const {
  check_index(space(), e);
  return std::visit(Overloaded{[&](const SimplexModel& m) {
                                 const double n = static_cast<double>(m.dimension());
                                 const double s = m.budget() / m.alpha(e);
                                 return 2.0 * s * s / ((n + 1.0) * (n + 2.0));
                               },
                               [&](const ProductExponential& m) {
                                 return 2.0 / (m.rates[e] * m.rates[e]);
                               },
                               [&](const OrthantBall& m) {
                                 const double n = static_cast<double>(m.space.size());
                                 return m.radius * m.radius / (n + 2.0);
                               }},
                    kind_);
}

double DensityModel::mean(EdgeIndex e) const {
  check_index(space(), e);
  return std::visit(Overloaded{[&](const SimplexModel& m) {
                                 const double n = static_cast<double>(m.dimension());
                                 return m.budget() / (m.alpha(e) * (n + 1.0));
                               },
                               [&](const ProductExponential& m) { return 1.0 / m.rates[e]; },
                               [&](const OrthantBall& m) {
                                 const double b = (static_cast<double>(m.space.size()) + 1.0) / 2.0;
                                 return m.radius * boost::math::tgamma_ratio(b + 0.5, b + 1.0) /
                                        std::sqrt(std::numbers::pi);
                               }},
                    kind_);
}

double DensityModel::standard_deviation(EdgeIndex e) const {
  const double mu = mean(e);
  return std::sqrt(std::max(0.0, second_moment(e) - mu * mu));
}

double DensityModel::mode_density(EdgeIndex e) const {
  check_index(space(), e);
  return std::visit(Overloaded{[&](const SimplexModel& m) {
                                 return static_cast<double>(m.dimension()) * m.alpha(e) /
                                        m.budget();
                               },
                               [&](const ProductExponential& m) { return m.rates[e]; },
                               [&](const OrthantBall& m) {
                                 const double n = static_cast<double>(m.space.size());
                                 return 2.0 / (m.radius * boost::math::beta(0.5, (n + 1.0) / 2.0));
                               }},
                    kind_);
}

double DensityModel::marginal_cdf(EdgeIndex e, double p) const {
  check_index(space(), e);
  if (!(p >= 0.0)) throw DomainError("marginal_cdf requires p >= 0");
  return std::visit(Overloaded{[&](const SimplexModel& m) {
                                 const double x = m.alpha(e) * p / m.budget();
                                 return 1.0 - pow_one_minus(x, static_cast<double>(m.dimension()));
                               },
                               [&](const ProductExponential& m) {
                                 return -std::expm1(-m.rates[e] * p);
                               },
                               [&](const OrthantBall& m) {
                                 if (p >= m.radius) return 1.0;
                                 const double n = static_cast<double>(m.space.size());
                                 const double t = p / m.radius;
                                 return boost::math::ibeta(0.5, (n + 1.0) / 2.0, t * t);
                               }},
                    kind_);
}

double DensityModel::sigma_min() const {
  double best = std::numeric_limits<double>::infinity();
  for (EdgeIndex e = 0; e < dimension(); ++e) best = std::min(best, std::sqrt(second_moment(e)));
  return best;
}

double DensityModel::sigma_max() const {
  double best = 0.0;
  for (EdgeIndex e = 0; e < dimension(); ++e) best = std::max(best, std::sqrt(second_moment(e)));
  return best;
}

double marginal_cdf(const DensityModel& model, EdgeIndex e, double p) {
  return model.marginal_cdf(e, p);
}

}  // namespace lcrg
