#include "cei/graph.hpp"

#include <bit>
#include <string>

#include "cei/errors.hpp"

namespace cei {

namespace {

void check_vertex(std::size_t n, Vertex v) {
  if (v >= n) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n));
  }
}

void check_pair(std::size_t n, Vertex u, Vertex v) {
  check_vertex(n, u);
  check_vertex(n, v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
}

}  // namespace

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

bool VertexSet::contains(Vertex v) const {
  return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1u);
}

void VertexSet::insert(Vertex v) {
  check_vertex(universe_, v);
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check_vertex(universe_, v);
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::size() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w; w &= w - 1) {
      out.push_back(i * kWordBits + std::countr_zero(w));
    }
  }
  return out;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) {
    check_pair(n, u, v);
    b.connect(u, v);
  }
  return std::move(b).build();
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void GraphBuilder::connect(Vertex u, Vertex v) {
  const std::size_t s = g_.stride_;
  g_.bits_[u * s + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  g_.bits_[v * s + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
}

void GraphBuilder::disconnect(Vertex u, Vertex v) {
  const std::size_t s = g_.stride_;
  g_.bits_[u * s + v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  g_.bits_[v * s + u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
}

void GraphBuilder::make_clique(Vertex first, Vertex last) {
  for (Vertex u = first; u < last; ++u) {
    for (Vertex v = u + 1; v < last; ++v) connect(u, v);
  }
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("complete graph needs n >= 1");
  GraphBuilder b(n);
  b.make_clique(0, n);
  return std::move(b).build();
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("path needs n >= 1");
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.connect(v, v + 1);
  return std::move(b).build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.connect(v, (v + 1) % n);
  return std::move(b).build();
}

Graph star_graph(std::size_t n) {
  if (n < 1) throw InvalidArgument("star needs n >= 1");
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.connect(0, v);
  return std::move(b).build();
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  check_pair(g.order(), u, v);
  if (g.adjacent(u, v)) {
    throw InvalidArgument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                          " are already adjacent");
  }
  GraphBuilder b(g);
  b.connect(u, v);
  return std::move(b).build();
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  check_pair(g.order(), u, v);
  if (!g.adjacent(u, v)) {
    throw InvalidArgument("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                          " are not adjacent");
  }
  GraphBuilder b(g);
  b.disconnect(u, v);
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw InvalidArgument("vertex set universe differs from graph order");
  auto keep = s.members();
  if (keep.empty()) throw InvalidArgument("induced subgraph of an empty vertex set");
  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (g.adjacent(keep[i], keep[j])) b.connect(i, j);
    }
  }
  return std::move(b).build();
}

namespace {

// Places `parts` side by side; edges inside each part are copied.
GraphBuilder lay_out(std::span<const Graph* const> parts, std::vector<std::size_t>& offsets) {
  std::size_t n = 0;
  offsets.clear();
  for (const Graph* p : parts) {
    offsets.push_back(n);
    n += p->order();
  }
  GraphBuilder b(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (auto [u, v] : parts[i]->edges()) b.connect(offsets[i] + u, offsets[i] + v);
  }
  return b;
}

void connect_blocks(GraphBuilder& b, std::size_t off_a, std::size_t n_a, std::size_t off_b,
                    std::size_t n_b) {
  for (std::size_t u = 0; u < n_a; ++u) {
    for (std::size_t v = 0; v < n_b; ++v) b.connect(off_a + u, off_b + v);
  }
}

}  // namespace

Graph disjoint_union(const Graph& a, const Graph& b) {
  const Graph* parts[] = {&a, &b};
  std::vector<std::size_t> offsets;
  return std::move(lay_out(parts, offsets)).build();
}

Graph copies(std::size_t m, const Graph& g) {
  std::vector<const Graph*> parts(m, &g);
  std::vector<std::size_t> offsets;
  return std::move(lay_out(parts, offsets)).build();
}

Graph join(const Graph& a, const Graph& b) {
  const Graph* parts[] = {&a, &b};
  std::vector<std::size_t> offsets;
  GraphBuilder out = lay_out(parts, offsets);
  connect_blocks(out, offsets[0], a.order(), offsets[1], b.order());
  return std::move(out).build();
}

Graph sequential_join(std::span<const Graph> parts) {
  if (parts.empty()) throw InvalidArgument("sequential join of an empty list");
  std::vector<const Graph*> kept;
  for (const Graph& p : parts) {
    if (p.order() > 0) kept.push_back(&p);
  }
  std::vector<std::size_t> offsets;
  GraphBuilder out = lay_out(kept, offsets);
  for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
    connect_blocks(out, offsets[i], kept[i]->order(), offsets[i + 1], kept[i + 1]->order());
  }
  return std::move(out).build();
}

Graph sequential_join(std::initializer_list<Graph> parts) {
  return sequential_join(std::span<const Graph>(parts.begin(), parts.size()));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n) throw InvalidArgument("permutation size differs from graph order");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    check_vertex(n, p);
    if (seen[p]) throw InvalidArgument("relabeling is not a permutation");
    seen[p] = true;
  }
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.connect(perm[u], perm[v]);
  return std::move(b).build();
}

namespace {

// Vertices reachable from `start` avoiding `banned`; all as packed bitsets.
std::vector<std::uint64_t> reach(const Graph& g, Vertex start, const std::vector<std::uint64_t>& banned) {
  const std::size_t s = g.stride();
  std::vector<std::uint64_t> seen(s, 0), frontier(s, 0), next(s);
  seen[start / kWordBits] |= std::uint64_t{1} << (start % kWordBits);
  frontier = seen;
  bool grew = true;
  while (grew) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::uint64_t w = frontier[i]; w; w &= w - 1) {
        auto r = g.row(i * kWordBits + std::countr_zero(w));
        for (std::size_t j = 0; j < s; ++j) next[j] |= r[j];
      }
    }
    grew = false;
    for (std::size_t j = 0; j < s; ++j) {
      next[j] &= ~seen[j] & ~banned[j];
      seen[j] |= next[j];
      if (next[j]) grew = true;
    }
    frontier.swap(next);
  }
  return seen;
}

std::size_t popcount_all(const std::vector<std::uint64_t>& ws) {
  std::size_t c = 0;
  for (auto w : ws) c += std::popcount(w);
  return c;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("connectivity of the empty graph K_0");
  std::vector<std::uint64_t> none(g.stride(), 0);
  return popcount_all(reach(g, 0, none)) == g.order();
}

std::vector<Vertex> non_cut_vertices(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> out;
  if (n <= 2) {
    for (Vertex v = 0; v < n; ++v) out.push_back(v);
    return out;
  }
  std::vector<std::uint64_t> banned(g.stride(), 0);
  for (Vertex v = 0; v < n; ++v) {
    banned[v / kWordBits] = std::uint64_t{1} << (v % kWordBits);
    Vertex start = v == 0 ? 1 : 0;
    if (popcount_all(reach(g, start, banned)) == n - 1) out.push_back(v);
    banned[v / kWordBits] = 0;
  }
  return out;
}

}  // namespace cei
