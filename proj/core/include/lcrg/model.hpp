#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lcrg/edge_space.hpp"

namespace lcrg {

/// Per-vertex factors d_v of a decomposable weighting alpha_vw = d_v * d_w.
class DecomposableWeights {
 public:
  explicit DecomposableWeights(std::vector<double> d);

  /// d_v = 1 for every vertex.
  static DecomposableWeights uniform(std::size_t n);

  std::size_t vertex_count() const noexcept { return d_.size(); }
  std::span<const double> values() const noexcept { return d_; }
  double operator[](Vertex v) const { return d_.at(v); }

  /// D = sum of all d_v.
  double total() const noexcept { return total_; }
  /// d_S = sum of d_v over v in S.
  double subset_total(std::span<const Vertex> subset) const;

  /// True when every d_v lies in [1/omega, omega].
  bool within_regime(double omega) const noexcept;

 private:
  std::vector<double> d_;
  double total_ = 0.0;
};

/// Uniform distribution over the weighted simplex
/// { x >= 0 : sum_e alpha_e x_e <= L }.
class SimplexModel {
 public:
  /// Throws DomainError when some alpha_e <= 0, L <= 0, or (if M is given)
  /// some alpha_e falls outside [1/M, M].
  SimplexModel(EdgeSpace space, std::vector<double> alpha, std::optional<double> budget = {},
               std::optional<double> bound = {});

  /// alpha = 1 on every coordinate.
  static SimplexModel uniform(EdgeSpace space, std::optional<double> budget = {});
  /// Undirected model with alpha_vw = d_v d_w.
  static SimplexModel decomposable(const DecomposableWeights& d,
                                   std::optional<double> budget = {});
  /// Directed model whose weight depends on the head only: alpha_(i,j) = beta_j.
  static SimplexModel row_symmetric(std::vector<double> beta, std::optional<double> budget = {});

  const EdgeSpace& space() const noexcept { return space_; }
  std::size_t vertex_count() const noexcept { return space_.vertex_count(); }
  std::size_t dimension() const noexcept { return space_.size(); }
  double budget() const noexcept { return budget_; }
  std::optional<double> declared_bound() const noexcept { return bound_; }

  std::span<const double> alpha() const noexcept { return alpha_; }
  double alpha(EdgeIndex e) const { return alpha_.at(e); }
  /// alpha(S) = sum of alpha_e over e in S.
  double alpha_of(std::span<const EdgeIndex> edges) const;

  /// Smallest M for which the weights are M-bounded.
  double effective_bound() const noexcept;
  bool is_uniform() const noexcept { return uniform_; }
  /// alpha_(v1,w) == alpha_(v2,w) for all v1, v2, w. Always false for
  /// undirected spaces.
  bool is_row_symmetric() const noexcept;

 private:
  EdgeSpace space_;
  std::vector<double> alpha_;
  double budget_;
  std::optional<double> bound_;
  bool uniform_ = false;
};

/// alpha_v = sum over w != v of alpha_vw. Directed spaces sum out-edges.
double vertex_alpha(const SimplexModel& model, Vertex v);

/// alpha_v for every vertex.
std::vector<double> vertex_alphas(const SimplexModel& model);

/// One sampled point of R_+^N indexed by the canonical edge order.
class WeightVector {
 public:
  WeightVector(EdgeSpace space, std::vector<double> x);

  const EdgeSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return x_.size(); }
  std::span<const double> values() const noexcept { return x_; }
  double operator[](EdgeIndex e) const noexcept { return x_[e]; }
  double at(Vertex i, Vertex j) const { return x_[space_.index(i, j)]; }

 private:
  EdgeSpace space_;
  std::vector<double> x_;
};

}  // namespace lcrg
