#pragma once

// Brute-force reference implementations. Deliberately naive and independent
// of the library's search code; only Graph storage is shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cei/graph.hpp"

namespace oracle {

using cei::Graph;
using cei::Vertex;

// Minimum over all n! relabelings of the upper-triangle bit string,
// read as an integer (n <= 11).
inline std::uint64_t brute_canonical_key(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  auto edges = g.edges();
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  const std::size_t bits = n * (n - 1) / 2;
  do {
    std::uint64_t key = 0;
    for (auto [u, v] : edges) {
      Vertex a = std::min(perm[u], perm[v]), b = std::max(perm[u], perm[v]);
      key |= std::uint64_t{1} << (bits - 1 - (b * (b - 1) / 2 + a));
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w = 0; w < g.order(); ++w) {
      if (g.adjacent(v, w) && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  cei::GraphBuilder b(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      if ((mask >> k) & 1u) b.connect(u, v);
    }
  }
  return std::move(b).build();
}

// Every labeled graph on n vertices, connected ones kept, one per
// isomorphism class (by brute-force canonical key).
inline std::vector<Graph> dumb_connected(std::size_t n) {
  const std::size_t bits = n * (n - 1) / 2;
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Graph g = from_mask(n, mask);
    if (!connected(g)) continue;
    if (seen.insert(brute_canonical_key(g)).second) out.push_back(g);
  }
  return out;
}

// All-pairs shortest paths by Floyd-Warshall; eccentricity per vertex.
inline std::vector<std::size_t> apsp_eccentricities(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t inf = n + 1;
  std::vector<std::size_t> d(n * n, inf);
  for (Vertex u = 0; u < n; ++u) {
    d[u * n + u] = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) d[u * n + v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
    }
  }
  std::vector<std::size_t> ecc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ecc[i] = std::max(ecc[i], d[i * n + j]);
  }
  return ecc;
}

// Smallest |S| such that G - S is disconnected or a single vertex.
inline std::size_t brute_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = n - 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const std::size_t removed = std::popcount(s);
    if (removed >= best) continue;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (!((s >> v) & 1u)) rest.push_back(v);
    }
    cei::GraphBuilder b(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        if (g.adjacent(rest[i], rest[j])) b.connect(i, j);
      }
    }
    Graph h = std::move(b).build();
    if (h.order() == 1 || !connected(h)) best = removed;
  }
  return best;
}

inline std::size_t brute_independence(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = 0;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) <= best) continue;
    bool independent = true;
    for (std::uint64_t w = s; w && independent; w &= w - 1) {
      Vertex v = std::countr_zero(w);
      if (g.row_word(v) & s) independent = false;
    }
    if (independent) best = std::popcount(s);
  }
  return best;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  cei::GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.connect(u, v);
    }
  }
  return std::move(b).build();
}

// Random spanning tree plus random extra edges: always connected.
inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  cei::GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.connect(v, std::uniform_int_distribution<Vertex>(0, v - 1)(rng));
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!b.adjacent(u, v) && coin(rng)) b.connect(u, v);
    }
  }
  return std::move(b).build();
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
