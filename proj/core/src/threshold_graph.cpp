#include "lcrg/threshold_graph.hpp"

#include "lcrg/errors.hpp"

namespace lcrg {

ThresholdGraph::ThresholdGraph(const EdgeSpace& space, std::vector<std::uint64_t> bitmap,
                               std::vector<EdgeIndex> ids)
    : space_(space),
      n_(space.vertex_count()),
      bitmap_(std::move(bitmap)),
      edge_ids_(std::move(ids)),
      offsets_(n_ + 1, 0) {
  edges_.reserve(edge_ids_.size());
  if (space_.is_directed()) {
    for (EdgeIndex e : edge_ids_) edges_.push_back(space_.endpoints(e));
  } else {
    // Edge ids are increasing, so walk the rows instead of inverting each id.
    Vertex row = 0;
    for (EdgeIndex e : edge_ids_) {
      while (space_.row_start(row + 1) <= e) ++row;
      edges_.emplace_back(row, row + 1 + (e - space_.row_start(row)));
    }
  }

  for (const auto& [a, b] : edges_) {
    ++offsets_[a + 1];
    if (!space_.is_directed()) ++offsets_[b + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    adjacency_[cursor[a]++] = b;
    if (!space_.is_directed()) adjacency_[cursor[b]++] = a;
  }
}

bool ThresholdGraph::is_subgraph_of(const ThresholdGraph& other) const {
  if (!(space_ == other.space_)) return false;
  for (std::size_t w = 0; w < bitmap_.size(); ++w) {
    if (bitmap_[w] & ~other.bitmap_[w]) return false;
  }
  return true;
}

ThresholdGraph threshold(const WeightVector& x, double p) {
  if (!(p >= 0.0)) throw DomainError("threshold p must be non-negative");
  const auto values = x.values();
  std::vector<std::uint64_t> bitmap((values.size() + 63) / 64, 0);
  std::vector<EdgeIndex> ids;
  for (EdgeIndex e = 0; e < values.size(); ++e) {
    if (values[e] <= p) {
      bitmap[e >> 6] |= std::uint64_t{1} << (e & 63);
      ids.push_back(e);
    }
  }
  return ThresholdGraph(x.space(), std::move(bitmap), std::move(ids));
}

}  // namespace lcrg
