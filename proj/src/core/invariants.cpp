#include "cei/invariants.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "cei/errors.hpp"

namespace cei {

std::string_view to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Diameter: return "diameter";
    case ClassKind::Independence: return "independence";
    case ClassKind::MinDegree: return "min-degree";
  }
  return "?";
}

ClassKind parse_class_kind(std::string_view text) {
  if (text == "diam" || text == "diameter" || text == "d") return ClassKind::Diameter;
  if (text == "alpha" || text == "independence") return ClassKind::Independence;
  if (text == "delta" || text == "min-degree" || text == "mindegree") return ClassKind::MinDegree;
  throw InvalidArgument("unknown class '" + std::string(text) + "' (expected diam, alpha or delta)");
}

std::string_view to_string(Connectivity mode) {
  return mode == Connectivity::AtLeast ? "at-least" : "exactly";
}

Connectivity parse_connectivity(std::string_view text) {
  if (text == "at-least") return Connectivity::AtLeast;
  if (text == "exactly") return Connectivity::Exactly;
  throw InvalidArgument("unknown connectivity mode '" + std::string(text) + "' (expected at-least or exactly)");
}

void ClassSpec::validate() const {
  if (n < 2) throw InvalidArgument("class order must satisfy n >= 2");
  if (k < 1) throw InvalidArgument("class connectivity must satisfy k >= 1");
  if (value < 1) throw InvalidArgument("class parameter must be >= 1");
  if (kind == ClassKind::MinDegree && value < k) {
    throw InvalidArgument("min-degree class needs delta >= k");
  }
}

namespace {

// Small dynamic bitset over 0..n-1 used by the search routines below.
struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t n = 0) : w(words_for(n), 0) {}
  static Bits full(std::size_t n) {
    Bits b(n);
    for (std::size_t v = 0; v < n; ++v) b.set(v);
    return b;
  }
  void set(std::size_t v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
  void reset(std::size_t v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
  bool any() const {
    return std::any_of(w.begin(), w.end(), [](std::uint64_t x) { return x != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  std::size_t count_and(std::span<const std::uint64_t> row) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & row[i]);
    return c;
  }
  std::size_t first() const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i]) return i * 64 + std::countr_zero(w[i]);
    }
    return std::numeric_limits<std::size_t>::max();
  }
  void and_with(std::span<const std::uint64_t> row) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= row[i];
  }
  void and_not(std::span<const std::uint64_t> row) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~row[i];
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::uint64_t x = w[i]; x; x &= x - 1) f(i * 64 + std::countr_zero(x));
    }
  }
};

void require_vertices(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("invariant of the empty graph K_0");
}

// Eccentricity of `source`; SIZE_MAX when some vertex is unreachable.
std::size_t bfs_eccentricity(const Graph& g, Vertex source) {
  const std::size_t n = g.order();
  Bits seen(n), frontier(n);
  seen.set(source);
  frontier.set(source);
  std::size_t reached = 1;
  std::size_t depth = 0;
  while (reached < n) {
    Bits next(n);
    frontier.for_each([&](std::size_t v) {
      auto r = g.row(v);
      for (std::size_t i = 0; i < next.w.size(); ++i) next.w[i] |= r[i];
    });
    for (std::size_t i = 0; i < next.w.size(); ++i) {
      next.w[i] &= ~seen.w[i];
      seen.w[i] |= next.w[i];
    }
    std::size_t added = next.count();
    if (added == 0) return std::numeric_limits<std::size_t>::max();
    reached += added;
    ++depth;
    frontier = std::move(next);
  }
  return depth;
}

}  // namespace

std::vector<std::size_t> degrees(const Graph& g) {
  require_vertices(g);
  std::vector<std::size_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

std::vector<std::size_t> eccentricities(const Graph& g) {
  require_vertices(g);
  std::vector<std::size_t> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v] = bfs_eccentricity(g, v);
    if (out[v] == std::numeric_limits<std::size_t>::max()) {
      throw NotConnected("eccentricity is undefined on a disconnected graph");
    }
  }
  return out;
}

std::vector<VertexProfile> vertex_profiles(const Graph& g) {
  auto ecc = eccentricities(g);
  std::vector<VertexProfile> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out[v] = {g.degree(v), ecc[v]};
  return out;
}

std::size_t diameter(const Graph& g) {
  auto ecc = eccentricities(g);
  return *std::max_element(ecc.begin(), ecc.end());
}

std::size_t radius(const Graph& g) {
  auto ecc = eccentricities(g);
  return *std::min_element(ecc.begin(), ecc.end());
}

Rational connective_eccentricity_index(const Graph& g) {
  if (g.order() < 2) throw InvalidArgument("CEI needs n >= 2 (a lone vertex has eccentricity 0)");
  auto ecc = eccentricities(g);
  // Group degree mass by eccentricity so each denominator is added once.
  std::vector<std::uint64_t> mass(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) mass[ecc[v]] += g.degree(v);
  Rational total;
  for (std::size_t e = 1; e < mass.size(); ++e) {
    if (mass[e]) total += Rational(static_cast<std::int64_t>(mass[e]), static_cast<std::int64_t>(e));
  }
  return total;
}

std::uint64_t eccentric_connectivity_index(const Graph& g) {
  auto ecc = eccentricities(g);
  std::uint64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) total += static_cast<std::uint64_t>(g.degree(v)) * ecc[v];
  return total;
}

std::size_t min_degree(const Graph& g) {
  auto d = degrees(g);
  return *std::min_element(d.begin(), d.end());
}

std::size_t max_degree(const Graph& g) {
  auto d = degrees(g);
  return *std::max_element(d.begin(), d.end());
}

namespace {

// Unit vertex capacities via in/out splitting: vertex v becomes 2v -> 2v+1.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : n_(g.order()), head_(2 * n_, -1) {
    const int big = static_cast<int>(n_);
    for (Vertex v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
      add_arc(2 * u + 1, 2 * v, big);
      add_arc(2 * v + 1, 2 * u, big);
    }
    base_cap_ = cap_;
  }

  // Internally vertex-disjoint s-t paths, counting at most `limit`.
  std::size_t disjoint_paths(Vertex s, Vertex t, std::size_t limit) {
    cap_ = base_cap_;
    const std::size_t source = 2 * s + 1;
    const std::size_t sink = 2 * t;
    std::size_t flow = 0;
    std::vector<int> via(2 * n_);
    std::vector<std::size_t> queue;
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      queue.assign(1, source);
      via[source] = -2;
      for (std::size_t qi = 0; qi < queue.size() && via[sink] == -1; ++qi) {
        std::size_t x = queue[qi];
        for (int a = head_[x]; a != -1; a = next_[a]) {
          std::size_t y = to_[a];
          if (cap_[a] > 0 && via[y] == -1) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == -1) break;
      for (std::size_t y = sink; y != source;) {
        int a = via[y];
        --cap_[a];
        ++cap_[a ^ 1];
        y = to_[a ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  void add_arc(std::size_t from, std::size_t to, int cap) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
  }

  std::size_t n_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<std::size_t> to_;
  std::vector<int> cap_;
  std::vector<int> base_cap_;
};

bool is_complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

void require_connected_pair(const Graph& g) {
  if (g.order() < 2) throw InvalidArgument("connectivity needs n >= 2");
  if (!is_connected(g)) throw NotConnected("connectivity of a disconnected graph");
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g) {
  require_connected_pair(g);
  const std::size_t n = g.order();
  if (is_complete(g)) return n - 1;
  SplitFlow flow(g);
  std::size_t best = n - 1;
  // Some vertex among the first best+1 lies outside a minimum cut, and a
  // vertex separated from it has a larger index.
  for (Vertex i = 0; i <= best && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      best = std::min(best, flow.disjoint_paths(i, j, best));
    }
  }
  return best;
}

bool is_k_connected(const Graph& g, std::size_t k) {
  require_connected_pair(g);
  const std::size_t n = g.order();
  if (k == 0) return true;
  if (k > n - 1) return false;
  if (is_complete(g)) return true;
  if (min_degree(g) < k) return false;
  SplitFlow flow(g);
  for (Vertex i = 0; i < k && i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.adjacent(i, j)) continue;
      if (flow.disjoint_paths(i, j, k) < k) return false;
    }
  }
  return true;
}

namespace {

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  std::size_t run() {
    best_ = 0;
    solve(Bits::full(g_.order()), 0);
    return best_;
  }

 private:
  // Vertices of `p` partitioned greedily into cliques; an independent set
  // meets each clique at most once.
  std::size_t clique_cover_bound(const Bits& p) const {
    Bits rest = p;
    std::size_t cliques = 0;
    while (rest.any()) {
      Bits cand = rest;
      while (cand.any()) {
        std::size_t v = cand.first();
        rest.reset(v);
        cand.reset(v);
        cand.and_with(g_.row(v));
      }
      ++cliques;
    }
    return cliques;
  }

  void solve(Bits p, std::size_t size) {
    if (!p.any()) {
      best_ = std::max(best_, size);
      return;
    }
    std::size_t pivot = 0, pivot_degree = 0;
    bool first = true;
    p.for_each([&](std::size_t v) {
      std::size_t d = p.count_and(g_.row(v));
      if (first || d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
        first = false;
      }
    });
    if (pivot_degree == 0) {
      best_ = std::max(best_, size + p.count());
      return;
    }
    if (size + clique_cover_bound(p) <= best_) return;

    Bits with = p;
    with.and_not(g_.row(pivot));
    with.reset(pivot);
    solve(std::move(with), size + 1);

    p.reset(pivot);
    solve(std::move(p), size);
  }

  const Graph& g_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t independence_number(const Graph& g) {
  require_vertices(g);
  return IndependentSetSearch(g).run();
}

InvariantSummary summarize(const Graph& g) {
  if (g.order() < 2) throw InvalidArgument("summary needs n >= 2");
  auto ecc = eccentricities(g);
  InvariantSummary s;
  s.n = g.order();
  s.edges = g.edge_count();
  auto deg = degrees(g);
  s.min_degree = *std::min_element(deg.begin(), deg.end());
  s.max_degree = *std::max_element(deg.begin(), deg.end());
  s.radius = *std::min_element(ecc.begin(), ecc.end());
  s.diameter = *std::max_element(ecc.begin(), ecc.end());
  s.connectivity = vertex_connectivity(g);
  s.independence_number = independence_number(g);
  s.cei = connective_eccentricity_index(g);
  s.eci = eccentric_connectivity_index(g);
  return s;
}

bool is_member(const Graph& g, const ClassSpec& spec) {
  spec.validate();
  if (g.order() != spec.n) {
    throw InvalidArgument("graph order " + std::to_string(g.order()) + " differs from class order " +
                          std::to_string(spec.n));
  }
  if (!is_connected(g)) throw NotConnected("class membership requires a connected graph");
  if (min_degree(g) < spec.k) return false;
  switch (spec.kind) {
    case ClassKind::Diameter:
      if (diameter(g) != spec.value) return false;
      break;
    case ClassKind::Independence:
      if (independence_number(g) != spec.value) return false;
      break;
    case ClassKind::MinDegree:
      if (min_degree(g) < spec.value) return false;
      break;
  }
  if (!is_k_connected(g, spec.k)) return false;
  return spec.connectivity == Connectivity::AtLeast || !is_k_connected(g, spec.k + 1);
}

}  // namespace cei
