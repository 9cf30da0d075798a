#include "lcrg/samplers.hpp"

#include <cmath>
#include <stdexcept>

#include "lcrg/errors.hpp"

namespace lcrg {

WeightVector sample_simplex(const SimplexModel& model, SeededRng& rng) {
  const std::size_t dim = model.dimension();
  const auto alpha = model.alpha();
  std::vector<double> x(dim);
  double total = 0.0;
  for (double& v : x) {
    v = rng.exponential();
    total += v;
  }
  total += rng.exponential();  // slack coordinate E_{N+1}

  const double scale = model.budget() / total;
  long double used = 0.0L;
  for (std::size_t e = 0; e < dim; ++e) {
    const double y = x[e] * scale;
    used += y;
    x[e] = y / alpha[e];
  }
  if (used > static_cast<long double>(model.budget())) {
    throw std::logic_error("simplex sample violates the budget constraint");
  }
  return WeightVector(model.space(), std::move(x));
}

WeightVector sample_product_exponential(std::span<const double> rates, const EdgeSpace& space,
                                        SeededRng& rng) {
  if (rates.size() != space.size()) throw DomainError("one rate per coordinate is required");
  std::vector<double> x(space.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (!(rates[e] > 0.0)) throw DomainError("exponential rates must be positive");
    x[e] = rng.exponential() / rates[e];
  }
  return WeightVector(space, std::move(x));
}

WeightVector sample_orthant_ball(double radius, const EdgeSpace& space, SeededRng& rng) {
  if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
  const std::size_t dim = space.size();
  std::vector<double> x(dim);
  double norm2 = 0.0;
  for (double& v : x) {
    v = rng.normal();
    norm2 += v * v;
  }
  // 1 - U keeps the radial draw away from zero.
  const double r = radius * std::pow(1.0 - rng.uniform(), 1.0 / static_cast<double>(dim));
  const double scale = r / std::sqrt(norm2);
  for (double& v : x) v = std::fabs(v) * scale;
  return WeightVector(space, std::move(x));
}

WeightVector sample_row_symmetric(const SimplexModel& model, SeededRng& rng) {
  if (!model.is_row_symmetric()) {
    throw DomainError("model is not a row-symmetric directed simplex");
  }
  return sample_simplex(model, rng);
}

}  // namespace lcrg
