#include "lcrg/edge_space.hpp"

#include <cmath>
#include <string>

#include "lcrg/errors.hpp"

namespace lcrg {

EdgeSpace::EdgeSpace(std::size_t n, bool directed)
    : n_(n), size_(directed ? n * (n - 1) : n * (n - 1) / 2), directed_(directed) {
  if (n < 2) {
    throw DomainError("EdgeSpace requires at least 2 vertices, got " + std::to_string(n));
  }
}

EdgeSpace EdgeSpace::undirected(std::size_t n) { return EdgeSpace(n, false); }

EdgeSpace EdgeSpace::directed(std::size_t n) { return EdgeSpace(n, true); }

EdgeIndex EdgeSpace::index(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_) {
    throw DomainError("vertex out of range: (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") with n = " + std::to_string(n_));
  }
  if (i == j) {
    throw DomainError("self-loop (" + std::to_string(i) + ", " + std::to_string(i) +
                      ") has no edge index");
  }
  if (directed_) {
    return i * (n_ - 1) + (j < i ? j : j - 1);
  }
  if (i > j) std::swap(i, j);
  return row_start(i) + (j - i - 1);
}

std::pair<Vertex, Vertex> EdgeSpace::endpoints(EdgeIndex e) const {
  if (e >= size_) {
    throw DomainError("edge index " + std::to_string(e) + " out of range [0, " +
                      std::to_string(size_) + ")");
  }
  if (directed_) {
    const Vertex i = e / (n_ - 1);
    const Vertex r = e % (n_ - 1);
    return {i, r < i ? r : r + 1};
  }
  // Row i holds n-1-i edges. Solve row_start(i) <= e for the largest i with
  // the quadratic formula, then correct any floating point drift.
  const double b = 2.0 * static_cast<double>(n_) - 1.0;
  auto i = static_cast<Vertex>(
      std::floor((b - std::sqrt(b * b - 8.0 * static_cast<double>(e))) / 2.0));
  if (i >= n_ - 1) i = n_ - 2;
  while (i > 0 && row_start(i) > e) --i;
  while (i + 1 < n_ - 1 && row_start(i + 1) <= e) ++i;
  return {i, i + 1 + (e - row_start(i))};
}

}  // namespace lcrg
