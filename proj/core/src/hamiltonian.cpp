#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "lcrg/errors.hpp"
#include "lcrg/graph_algorithms.hpp"

namespace lcrg {

namespace {

using Mask = std::uint32_t;

class HamiltonSearch {
 public:
  explicit HamiltonSearch(std::vector<Mask> adj)
      : adj_(std::move(adj)), n_(adj_.size()), all_((Mask{1} << n_) - 1) {}

  bool run() {
    if (n_ < 3) return false;
    for (Mask a : adj_) {
      if (std::popcount(a) < 2) return false;
    }
    if (!biconnected()) return false;
    return extend(0, Mask{1}, 1);
  }

 private:
  // Removing any single vertex must leave the rest connected.
  bool biconnected() const {
    for (std::size_t cut = 0; cut < n_; ++cut) {
      const Mask alive = all_ & ~(Mask{1} << cut);
      const Mask start = alive & (~alive + 1);
      Mask seen = start;
      Mask frontier = start;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= alive & ~seen;
        seen |= next;
        frontier = next;
      }
      if (seen != alive) return false;
    }
    return true;
  }

  bool extend(std::size_t cur, Mask visited, std::size_t count) {
    if (count == n_) return (adj_[cur] & 1u) != 0;
    const Mask unvisited = all_ & ~visited;
    if ((adj_[0] & unvisited) == 0) return false;

    // Every unvisited vertex still needs two usable neighbours: the path end,
    // the start vertex, or other unvisited vertices.
    const Mask usable = unvisited | (Mask{1} << cur) | Mask{1};
    for (Mask u = unvisited; u; u &= u - 1) {
      if (std::popcount(adj_[std::countr_zero(u)] & usable) < 2) return false;
    }

    Mask candidates = adj_[cur] & unvisited;
    // Try the most constrained neighbour first.
    std::vector<std::pair<int, std::size_t>> order;
    for (Mask c = candidates; c; c &= c - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(c));
      order.emplace_back(std::popcount(adj_[v] & unvisited), v);
    }
    std::sort(order.begin(), order.end());
    for (const auto& [deg, v] : order) {
      if (extend(v, visited | (Mask{1} << v), count + 1)) return true;
    }
    return false;
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  Mask all_;
};

}  // namespace

bool is_hamiltonian(const ThresholdGraph& g) {
  if (g.is_directed()) throw DomainError("operation is defined for undirected graphs only");
  const std::size_t n = g.vertex_count();
  if (n > kHamiltonianMaxVertices) {
    throw CapacityError("Hamiltonicity backtracking supports n <= 24, got n = " +
                        std::to_string(n));
  }
  std::vector<Mask> adj(n, 0);
  for (const auto& [a, b] : g.edges()) {
    adj[a] |= Mask{1} << b;
    adj[b] |= Mask{1} << a;
  }
  return HamiltonSearch(std::move(adj)).run();
}

}  // namespace lcrg
