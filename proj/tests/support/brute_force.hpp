#pragma once

// Exhaustive reference implementations used as independent oracles by the
// unit and acceptance tests. All are exponential and meant for tiny inputs.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "lcrg/atsp.hpp"
#include "lcrg/threshold_graph.hpp"

namespace lcrg::testing {

inline constexpr std::size_t kUnreached = 1000;

// All-pairs distances by repeated boolean products of the adjacency matrix
// of the graph whose edges are the set bits of `mask`.
inline std::vector<std::vector<std::size_t>> matrix_distances(std::size_t n, unsigned mask) {
  const auto space = EdgeSpace::undirected(n);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (EdgeIndex e = 0; e < space.size(); ++e) {
    if ((mask >> e) & 1u) {
      const auto [i, j] = space.endpoints(e);
      adj[i][j] = adj[j][i] = true;
    }
  }
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kUnreached));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (Vertex v = 0; v < n; ++v) {
    reach[v][v] = true;
    dist[v][v] = 0;
  }
  for (std::size_t len = 1; len < n; ++len) {
    std::vector<std::vector<bool>> next = reach;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex k = 0; k < n; ++k) {
        if (!reach[i][k]) continue;
        for (Vertex j = 0; j < n; ++j) {
          if (adj[k][j]) next[i][j] = true;
        }
      }
    }
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = 0; j < n; ++j) {
        if (next[i][j] && dist[i][j] == kUnreached) dist[i][j] = len;
      }
    }
    reach = std::move(next);
  }
  return dist;
}

struct BruteComponents {
  std::size_t count = 0;
  std::size_t largest = 0;
  // kUnreached when disconnected.
  std::size_t diameter = 0;
};

inline BruteComponents brute_components(std::size_t n, unsigned mask) {
  const auto dist = matrix_distances(n, mask);
  BruteComponents out;
  std::vector<bool> seen(n, false);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) out.diameter = std::max(out.diameter, dist[i][j]);
    if (seen[i]) continue;
    ++out.count;
    std::size_t size = 0;
    for (Vertex j = 0; j < n; ++j) {
      if (dist[i][j] != kUnreached) {
        seen[j] = true;
        ++size;
      }
    }
    out.largest = std::max(out.largest, size);
  }
  return out;
}

// Perfect matching across {0..n/2-1} x {n/2..n-1} by trying every bijection.
inline bool brute_cross_matching(const ThresholdGraph& g) {
  const std::size_t h = g.vertex_count() / 2;
  std::vector<Vertex> perm(h);
  std::iota(perm.begin(), perm.end(), h);
  do {
    bool ok = true;
    for (Vertex i = 0; i < h && ok; ++i) ok = g.has_edge(i, perm[i]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Hamiltonicity by dynamic programming over (visited set, endpoint).
inline bool dp_hamiltonian(const ThresholdGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) return false;
  const std::size_t full = std::size_t{1} << n;
  std::vector<std::uint32_t> reach(full, 0);
  reach[1] = 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1u) || !reach[mask]) continue;
    for (Vertex v = 0; v < n; ++v) {
      if (!((reach[mask] >> v) & 1u)) continue;
      for (Vertex w : g.neighbors(v)) {
        if (!((mask >> w) & 1u)) reach[mask | (std::size_t{1} << w)] |= 1u << w;
      }
    }
  }
  for (Vertex v : g.neighbors(0)) {
    if ((reach[full - 1] >> v) & 1u) return true;
  }
  return false;
}

// Minimum spanning tree weight over all n^(n-2) labelled trees, each
// decoded from its Pruefer sequence.
inline double min_tree_by_pruefer(const WeightVector& x) {
  const std::size_t n = x.space().vertex_count();
  if (n == 2) return x[0];
  std::vector<Vertex> seq(n - 2, 0);
  double best = HUGE_VAL;
  while (true) {
    std::vector<std::size_t> degree(n, 1);
    for (Vertex v : seq) ++degree[v];
    double w = 0.0;
    for (Vertex v : seq) {
      Vertex leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      w += x.at(leaf, v);
      --degree[leaf];
      --degree[v];
    }
    Vertex u = n;
    for (Vertex v = 0; v < n; ++v) {
      if (degree[v] != 1) continue;
      if (u == n) {
        u = v;
      } else {
        w += x.at(u, v);
      }
    }
    best = std::min(best, w);
    std::size_t k = 0;
    while (k < seq.size() && seq[k] == n - 1) seq[k++] = 0;
    if (k == seq.size()) break;
    ++seq[k];
  }
  return best;
}

// O(n^2) Prim on the complete graph.
inline double prim(const WeightVector& x) {
  const std::size_t n = x.space().vertex_count();
  std::vector<double> key(n, HUGE_VAL);
  std::vector<bool> in(n, false);
  key[0] = 0.0;
  double total = 0.0;
  for (std::size_t it = 0; it < n; ++it) {
    Vertex u = n;
    for (Vertex v = 0; v < n; ++v) {
      if (!in[v] && (u == n || key[v] < key[u])) u = v;
    }
    in[u] = true;
    total += key[u];
    for (Vertex v = 0; v < n; ++v) {
      if (!in[v]) key[v] = std::min(key[v], x.at(u, v));
    }
  }
  return total;
}

inline double brute_assignment(const CostMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = HUGE_VAL;
  do {
    double total = 0.0;
    for (Vertex i = 0; i < n; ++i) total += c(i, perm[i]);
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline double brute_tour(const CostMatrix& c) {
  const std::size_t n = c.size();
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  double best = HUGE_VAL;
  do {
    std::vector<Vertex> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    best = std::min(best, tour_cost(c, order));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

inline CostMatrix random_costs(std::size_t n, SeededRng& rng) {
  std::vector<double> c(n * n);
  for (double& v : c) v = rng.uniform();
  return CostMatrix(n, c);
}

}  // namespace lcrg::testing
