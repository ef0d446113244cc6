#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cei {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Subset of {0, ..., universe-1} stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe)) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t size() const;
  bool empty() const;
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class GraphBuilder;

/// Undirected simple graph on vertices 0..n-1, stored as a symmetric bit
/// matrix with one word-packed row per vertex. The zero-vertex graph is K_0,
/// the identity for join and union.
///
/// Graphs are immutable values; every operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : n_(n), stride_(words_for(n)), bits_(n * stride_) {}

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;
  std::size_t stride() const { return stride_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * stride_ + v / kWordBits] >> (v % kWordBits)) & 1u;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * stride_, stride_};
  }
  // Neighbourhood as a single word; requires order() <= 64.
  std::uint64_t row_word(Vertex v) const { return bits_[v * stride_]; }

  std::size_t degree(Vertex v) const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for building a Graph without per-edge copies.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  std::size_t order() const { return g_.n_; }
  bool adjacent(Vertex u, Vertex v) const { return g_.adjacent(u, v); }
  void connect(Vertex u, Vertex v);
  void disconnect(Vertex u, Vertex v);
  // Makes every pair of vertices in [first, last) adjacent.
  void make_clique(Vertex first, Vertex last);
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Centre is vertex 0.
Graph star_graph(std::size_t n);

Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);

// Members of `s` are re-indexed in ascending order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Vertices of `a` come first, then those of `b` shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph copies(std::size_t m, const Graph& g);
Graph join(const Graph& a, const Graph& b);

// Chain of joins between consecutive parts only. Empty parts (K_0) are
// dropped before composing.
Graph sequential_join(std::span<const Graph> parts);
Graph sequential_join(std::initializer_list<Graph> parts);

// perm[v] is the new index of vertex v.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);

// Vertices whose removal leaves the rest connected (every vertex of K_1 and K_2).
std::vector<Vertex> non_cut_vertices(const Graph& g);

}  // namespace cei
