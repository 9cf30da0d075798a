#include "lcrg/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lcrg/errors.hpp"

namespace lcrg {

DecomposableWeights::DecomposableWeights(std::vector<double> d) : d_(std::move(d)) {
  if (d_.size() < 2) throw DomainError("decomposable weights need at least 2 vertices");
  for (double v : d_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("decomposable weight factors must be positive and finite");
    }
  }
  total_ = std::accumulate(d_.begin(), d_.end(), 0.0);
}

DecomposableWeights DecomposableWeights::uniform(std::size_t n) {
  return DecomposableWeights(std::vector<double>(n, 1.0));
}

double DecomposableWeights::subset_total(std::span<const Vertex> subset) const {
  double s = 0.0;
  for (Vertex v : subset) s += d_.at(v);
  return s;
}

bool DecomposableWeights::within_regime(double omega) const noexcept {
  return std::all_of(d_.begin(), d_.end(),
                     [omega](double v) { return v >= 1.0 / omega && v <= omega; });
}

SimplexModel::SimplexModel(EdgeSpace space, std::vector<double> alpha,
                           std::optional<double> budget, std::optional<double> bound)
    : space_(space),
      alpha_(std::move(alpha)),
      budget_(budget.value_or(static_cast<double>(space.size()))),
      bound_(bound) {
  if (alpha_.size() != space_.size()) {
    throw DomainError("alpha has " + std::to_string(alpha_.size()) + " entries, expected " +
                      std::to_string(space_.size()));
  }
  if (!(budget_ > 0.0) || !std::isfinite(budget_)) {
    throw DomainError("simplex budget L must be positive and finite");
  }
  if (bound_ && !(*bound_ >= 1.0)) throw DomainError("declared bound M must be >= 1");
  uniform_ = true;
  for (double a : alpha_) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("alpha_e must be positive and finite");
    if (bound_ && (a < 1.0 / *bound_ || a > *bound_)) {
      throw DomainError("alpha_e = " + std::to_string(a) + " violates the declared bound M = " +
                        std::to_string(*bound_));
    }
    if (a != 1.0) uniform_ = false;
  }
}

SimplexModel SimplexModel::uniform(EdgeSpace space, std::optional<double> budget) {
  return SimplexModel(space, std::vector<double>(space.size(), 1.0), budget);
}

SimplexModel SimplexModel::decomposable(const DecomposableWeights& d,
                                        std::optional<double> budget) {
  const auto space = EdgeSpace::undirected(d.vertex_count());
  std::vector<double> alpha;
  alpha.reserve(space.size());
  const auto dv = d.values();
  for (Vertex i = 0; i < dv.size(); ++i) {
    for (Vertex j = i + 1; j < dv.size(); ++j) alpha.push_back(dv[i] * dv[j]);
  }
  return SimplexModel(space, std::move(alpha), budget);
}

SimplexModel SimplexModel::row_symmetric(std::vector<double> beta, std::optional<double> budget) {
  const auto space = EdgeSpace::directed(beta.size());
  for (double b : beta) {
    if (!(b > 0.0)) throw DomainError("row-symmetric head weights beta_w must be positive");
  }
  std::vector<double> alpha;
  alpha.reserve(space.size());
  for (Vertex i = 0; i < beta.size(); ++i) {
    for (Vertex j = 0; j < beta.size(); ++j) {
      if (i != j) alpha.push_back(beta[j]);
    }
  }
  return SimplexModel(space, std::move(alpha), budget);
}

double SimplexModel::alpha_of(std::span<const EdgeIndex> edges) const {
  double s = 0.0;
  for (EdgeIndex e : edges) s += alpha_.at(e);
  return s;
}

double SimplexModel::effective_bound() const noexcept {
  const auto [lo, hi] = std::minmax_element(alpha_.begin(), alpha_.end());
  return std::max(*hi, 1.0 / *lo);
}

bool SimplexModel::is_row_symmetric() const noexcept {
  if (!space_.is_directed()) return false;
  const std::size_t n = space_.vertex_count();
  for (Vertex w = 0; w < n; ++w) {
    const Vertex first = (w == 0) ? 1 : 0;
    const double ref = alpha_[space_.index(first, w)];
    for (Vertex v = 0; v < n; ++v) {
      if (v != w && alpha_[space_.index(v, w)] != ref) return false;
    }
  }
  return true;
}

double vertex_alpha(const SimplexModel& model, Vertex v) {
  const auto& space = model.space();
  if (v >= space.vertex_count()) throw DomainError("vertex out of range");
  double s = 0.0;
  for (Vertex w = 0; w < space.vertex_count(); ++w) {
    if (w != v) s += model.alpha(space.index(v, w));
  }
  return s;
}

std::vector<double> vertex_alphas(const SimplexModel& model) {
  const auto& space = model.space();
  const std::size_t n = space.vertex_count();
  std::vector<double> out(n, 0.0);
  const auto alpha = model.alpha();
  if (space.is_directed()) {
    for (EdgeIndex e = 0; e < alpha.size(); ++e) out[e / (n - 1)] += alpha[e];
    return out;
  }
  EdgeIndex e = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++e) {
      out[i] += alpha[e];
      out[j] += alpha[e];
    }
  }
  return out;
}

WeightVector::WeightVector(EdgeSpace space, std::vector<double> x)
    : space_(space), x_(std::move(x)) {
  if (x_.size() != space_.size()) throw DomainError("weight vector length does not match space");
  for (double v : x_) {
    if (!(v >= 0.0)) throw DomainError("edge weights must be non-negative");
  }
}

}  // namespace lcrg
