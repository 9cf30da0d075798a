#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "lcrg/model.hpp"

namespace lcrg {

/// The graph G_p with edge set { e : x_e <= p } for one weight vector x.
///
/// Stores a bitmap over edge indices (for coupling checks) and CSR adjacency
/// lists (for traversal). For directed spaces adjacency holds out-neighbours.
class ThresholdGraph {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const EdgeSpace& space() const noexcept { return space_; }
  bool is_directed() const noexcept { return space_.is_directed(); }

  bool contains(EdgeIndex e) const noexcept { return (bitmap_[e >> 6] >> (e & 63)) & 1u; }
  bool has_edge(Vertex i, Vertex j) const { return contains(space_.index(i, j)); }

  /// Endpoint pairs in increasing edge-index order.
  std::span<const std::pair<Vertex, Vertex>> edges() const noexcept { return edges_; }
  std::span<const EdgeIndex> edge_indices() const noexcept { return edge_ids_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// True when every edge of this graph is also an edge of other.
  bool is_subgraph_of(const ThresholdGraph& other) const;

  friend ThresholdGraph threshold(const WeightVector& x, double p);

 private:
  ThresholdGraph(const EdgeSpace& space, std::vector<std::uint64_t> bitmap,
                 std::vector<EdgeIndex> ids);

  EdgeSpace space_;
  std::size_t n_;
  std::vector<std::uint64_t> bitmap_;
  std::vector<EdgeIndex> edge_ids_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Graph of all coordinates with x_e <= p. Throws DomainError when p < 0 or
/// p is NaN. p = +inf yields the complete graph.
ThresholdGraph threshold(const WeightVector& x, double p);

}  // namespace lcrg
