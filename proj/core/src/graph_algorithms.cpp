#include "lcrg/graph_algorithms.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>

#include "lcrg/disjoint_sets.hpp"
#include "lcrg/errors.hpp"

namespace lcrg {

namespace {

void require_undirected(const ThresholdGraph& g) {
  if (g.is_directed()) throw DomainError("operation is defined for undirected graphs only");
}

class Bitset {
 public:
  explicit Bitset(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

 private:
  std::vector<std::uint64_t> words_;
};

// Eccentricity of `source` by direction-optimizing BFS: top-down expansion
// while the frontier is light, bottom-up parent search once it is heavy.
class EccentricityScanner {
 public:
  explicit EccentricityScanner(const ThresholdGraph& g)
      : g_(g), visited_(g.vertex_count()), frontier_bits_(g.vertex_count()) {
    total_degree_ = 2 * g.edge_count();
  }

  std::size_t eccentricity(Vertex source) {
    const std::size_t n = g_.vertex_count();
    visited_.clear();
    visited_.set(source);
    frontier_.assign(1, source);
    std::size_t reached = 1;
    std::size_t unexplored_degree = total_degree_ - g_.degree(source);
    std::size_t depth = 0;
    while (reached < n && !frontier_.empty()) {
      std::size_t frontier_degree = 0;
      for (Vertex v : frontier_) frontier_degree += g_.degree(v);
      next_.clear();
      if (frontier_degree * 14 > unexplored_degree) {
        frontier_bits_.clear();
        for (Vertex v : frontier_) frontier_bits_.set(v);
        for (Vertex v = 0; v < n; ++v) {
          if (visited_.test(v)) continue;
          for (Vertex w : g_.neighbors(v)) {
            if (frontier_bits_.test(w)) {
              next_.push_back(v);
              break;
            }
          }
        }
        for (Vertex v : next_) visited_.set(v);
      } else {
        for (Vertex v : frontier_) {
          for (Vertex w : g_.neighbors(v)) {
            if (!visited_.test(w)) {
              visited_.set(w);
              next_.push_back(w);
            }
          }
        }
      }
      if (next_.empty()) break;
      for (Vertex v : next_) unexplored_degree -= g_.degree(v);
      reached += next_.size();
      ++depth;
      std::swap(frontier_, next_);
    }
    return reached == n ? depth : kInfiniteDiameter;
  }

 private:
  const ThresholdGraph& g_;
  Bitset visited_;
  Bitset frontier_bits_;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> next_;
  std::size_t total_degree_ = 0;
};

}  // namespace

std::vector<std::size_t> ComponentSummary::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.size);
  return out;
}

ComponentSummary components(const ThresholdGraph& g) {
  require_undirected(g);
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  for (const auto& [a, b] : g.edges()) sets.unite(a, b);

  std::vector<std::size_t> root_slot(n, n);
  ComponentSummary summary;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t r = sets.find(v);
    if (root_slot[r] == n) {
      root_slot[r] = summary.components.size();
      summary.components.push_back({0, 0});
    }
    ++summary.components[root_slot[r]].size;
  }
  for (const auto& [a, b] : g.edges()) ++summary.components[root_slot[sets.find(a)]].edges;

  std::stable_sort(summary.components.begin(), summary.components.end(),
                   [](const auto& x, const auto& y) { return x.size > y.size; });
  summary.count = summary.components.size();
  for (const auto& c : summary.components) {
    ++summary.count_by_size[c.size];
    if (c.is_tree()) ++summary.tree_count_by_size[c.size];
  }
  summary.largest_fraction =
      static_cast<double>(summary.components.front().size) / static_cast<double>(n);
  return summary;
}

bool is_connected(const ThresholdGraph& g) {
  require_undirected(g);
  if (g.edge_count() + 1 < g.vertex_count()) return false;
  DisjointSets sets(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    sets.unite(a, b);
    if (sets.set_count() == 1) return true;
  }
  return sets.set_count() == 1;
}

std::size_t diameter(const ThresholdGraph& g) {
  require_undirected(g);
  if (!is_connected(g)) return kInfiniteDiameter;
  EccentricityScanner scanner(g);
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, scanner.eccentricity(v));
  return best;
}

std::size_t max_cross_matching(const ThresholdGraph& g) {
  require_undirected(g);
  const std::size_t n = g.vertex_count();
  const std::size_t half = n / 2;
  const std::size_t right = n - half;
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  constexpr std::size_t kInf = static_cast<std::size_t>(-1);

  std::vector<std::vector<std::size_t>> adj(half);
  for (const auto& [a, b] : g.edges()) {
    if (a < half && b >= half) adj[a].push_back(b - half);
  }

  std::vector<std::size_t> match_left(half, kFree), match_right(right, kFree), dist(half);
  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool found = false;
    for (std::size_t u = 0; u < half; ++u) {
      dist[u] = match_left[u] == kFree ? 0 : kInf;
      if (dist[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        const std::size_t w = match_right[v];
        if (w == kFree) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  };
  // Recursion depth is bounded by the augmenting path length (<= n/2).
  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t v : adj[u]) {
      const std::size_t w = match_right[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_left[u] = v;
        match_right[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  std::size_t matched = 0;
  while (bfs()) {
    for (std::size_t u = 0; u < half; ++u) {
      if (match_left[u] == kFree && dfs(dfs, u)) ++matched;
    }
  }
  return matched;
}

bool bipartite_perfect_matching(const ThresholdGraph& g) {
  if (g.vertex_count() % 2 != 0) throw DomainError("perfect matching needs an even vertex count");
  return max_cross_matching(g) == g.vertex_count() / 2;
}

SpanningTree mst_weight(const WeightVector& x) {
  const auto& space = x.space();
  if (space.is_directed()) throw DomainError("spanning trees are defined on undirected spaces");
  const auto w = x.values();
  std::vector<EdgeIndex> order(w.size());
  std::iota(order.begin(), order.end(), EdgeIndex{0});
  std::sort(order.begin(), order.end(), [&](EdgeIndex a, EdgeIndex b) {
    return w[a] < w[b] || (w[a] == w[b] && a < b);
  });

  const std::size_t n = space.vertex_count();
  DisjointSets sets(n);
  SpanningTree tree;
  tree.edges.reserve(n - 1);
  for (EdgeIndex e : order) {
    const auto [a, b] = space.endpoints(e);
    if (sets.unite(a, b)) {
      tree.weight += w[e];
      tree.edges.push_back(e);
      if (tree.edges.size() + 1 == n) break;
    }
  }
  return tree;
}

}  // namespace lcrg
