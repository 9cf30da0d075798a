#pragma once

#include <cstddef>
#include <utility>

namespace lcrg {

using Vertex = std::size_t;
using EdgeIndex = std::size_t;

/// Coordinate system for edge-weight vectors on n vertices.
///
/// Undirected spaces enumerate pairs i < j lexicographically, so that
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... map to 0, 1, 2, .... Directed
/// spaces enumerate ordered pairs row by row, skipping the diagonal.
class EdgeSpace {
 public:
  static EdgeSpace undirected(std::size_t n);
  static EdgeSpace directed(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  /// Number of coordinates N.
  std::size_t size() const noexcept { return size_; }
  bool is_directed() const noexcept { return directed_; }

  /// Canonical index of the edge between i and j. For undirected spaces
  /// the pair is normalized first, so index(i, j) == index(j, i).
  EdgeIndex index(Vertex i, Vertex j) const;

  /// Inverse of index(). Undirected results always have first < second.
  std::pair<Vertex, Vertex> endpoints(EdgeIndex e) const;

  /// Index of the first undirected edge (i, i+1) in row i.
  EdgeIndex row_start(Vertex i) const noexcept {
    return i * n_ - i * (i + 1) / 2;
  }

  friend bool operator==(const EdgeSpace&, const EdgeSpace&) = default;

 private:
  EdgeSpace(std::size_t n, bool directed);

  std::size_t n_ = 0;
  std::size_t size_ = 0;
  bool directed_ = false;
};

}  // namespace lcrg
