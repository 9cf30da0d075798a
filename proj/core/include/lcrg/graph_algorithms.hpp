#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "lcrg/threshold_graph.hpp"

namespace lcrg {

/// Connected components of a graph.
struct ComponentSummary {
  struct Component {
    std::size_t size;
    std::size_t edges;
    bool is_tree() const noexcept { return edges + 1 == size; }
  };

  std::size_t count = 0;
  /// Components sorted by size, largest first.
  std::vector<Component> components;
  /// kappa_k: number of components with k vertices.
  std::map<std::size_t, std::size_t> count_by_size;
  /// tau_k: number of tree components with k vertices.
  std::map<std::size_t, std::size_t> tree_count_by_size;
  double largest_fraction = 0.0;

  std::vector<std::size_t> sizes() const;
};

ComponentSummary components(const ThresholdGraph& g);

bool is_connected(const ThresholdGraph& g);

/// Value returned by diameter() for disconnected graphs.
inline constexpr std::size_t kInfiniteDiameter = std::numeric_limits<std::size_t>::max();

/// Largest BFS distance over all vertex pairs, or kInfiniteDiameter.
std::size_t diameter(const ThresholdGraph& g);

/// Size of a maximum matching using only edges between {0..n/2-1} and
/// {n/2..n-1} (Hopcroft-Karp).
std::size_t max_cross_matching(const ThresholdGraph& g);

/// True iff the cross edges of the fixed bisection contain a perfect
/// matching. Throws DomainError when n is odd.
bool bipartite_perfect_matching(const ThresholdGraph& g);

/// Largest n accepted by is_hamiltonian().
inline constexpr std::size_t kHamiltonianMaxVertices = 24;

/// Exact Hamilton cycle test by pruned backtracking. Throws CapacityError
/// for n > 24.
bool is_hamiltonian(const ThresholdGraph& g);

struct SpanningTree {
  double weight = 0.0;
  std::vector<EdgeIndex> edges;
};

/// Kruskal on the complete graph weighted by x; ties broken by edge index.
SpanningTree mst_weight(const WeightVector& x);

}  // namespace lcrg
