#pragma once

#include <span>
#include <vector>

#include "lcrg/model.hpp"
#include "lcrg/rng.hpp"

namespace lcrg {

/// Uniform point of { x >= 0 : sum alpha_e x_e <= L }.
///
/// Draws N+1 unit exponentials E_k and sets x_e = L E_e / (alpha_e sum_k E_k),
/// i.e. a flat Dirichlet point of the standard simplex rescaled per axis.
WeightVector sample_simplex(const SimplexModel& model, SeededRng& rng);

/// Independent coordinates, x_e exponential with rate rates[e].
WeightVector sample_product_exponential(std::span<const double> rates, const EdgeSpace& space,
                                        SeededRng& rng);

/// Uniform point of { x >= 0 : |x|_2 <= R }: a uniform point of the full
/// N-ball (Gaussian direction, radius R U^(1/N)) folded into the positive
/// orthant.
WeightVector sample_orthant_ball(double radius, const EdgeSpace& space, SeededRng& rng);

/// Row-symmetric ATSP weights: x uniform over the directed simplex of a
/// model whose weights depend only on the head vertex.
WeightVector sample_row_symmetric(const SimplexModel& model, SeededRng& rng);

}  // namespace lcrg
