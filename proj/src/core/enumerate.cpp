#include "cei/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "cei/errors.hpp"
#include "parallel.hpp"

namespace cei {

namespace {

bool by_label(const EnumeratedGraph& a, const EnumeratedGraph& b) { return a.label < b.label; }

// Children of `parent` (order m-1) that pass the canonical-deletion test.
std::vector<EnumeratedGraph> augment(const Graph& parent, std::size_t cap) {
  const std::size_t m = parent.order() + 1;
  const Vertex fresh = m - 1;
  GraphBuilder base(m);
  for (auto [u, v] : parent.edges()) base.connect(u, v);
  const Graph skeleton = std::move(base).build();

  std::vector<EnumeratedGraph> out;
  std::set<CanonicalLabel> seen;
  const std::uint64_t subsets = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    GraphBuilder b(skeleton);
    for (Vertex u = 0; u + 1 < m; ++u) {
      if ((mask >> u) & 1u) b.connect(u, fresh);
    }
    Graph child = std::move(b).build();

    // Deletion candidates: non-cut vertices of maximum degree among them.
    auto non_cut = non_cut_vertices(child);
    std::size_t top = 0;
    for (Vertex v : non_cut) top = std::max(top, child.degree(v));
    if (child.degree(fresh) != top) continue;
    std::vector<Vertex> candidates;
    for (Vertex v : non_cut) {
      if (child.degree(v) == top) candidates.push_back(v);
    }

    Canonization canon = canonize(child, {}, cap);
    if (candidates.size() > 1) {
      std::vector<std::size_t> position(m);
      for (std::size_t i = 0; i < m; ++i) position[canon.order[i]] = i;
      Vertex chosen = *std::max_element(candidates.begin(), candidates.end(),
                                        [&](Vertex a, Vertex b) { return position[a] < position[b]; });
      if (chosen != fresh && !same_orbit(child, fresh, chosen, cap)) continue;
    }
    if (!seen.insert(canon.label).second) continue;
    out.push_back({std::move(canon.label), std::move(canon.graph)});
  }
  return out;
}

std::vector<EnumeratedGraph> next_level(const std::vector<EnumeratedGraph>& parents, std::size_t cap,
                                        unsigned workers) {
  std::vector<std::vector<EnumeratedGraph>> shards(parents.size());
  detail::parallel_for(parents.size(), workers, [&](std::size_t i) { shards[i] = augment(parents[i].graph, cap); });
  std::vector<EnumeratedGraph> out;
  for (auto& shard : shards) {
    for (auto& g : shard) out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), by_label);
  auto dup = std::adjacent_find(out.begin(), out.end(),
                                [](const auto& a, const auto& b) { return a.label == b.label; });
  if (dup != out.end()) throw std::logic_error("canonical augmentation produced duplicate " + dup->label.graph6);
  return out;
}

void check_request(std::size_t n, const EnumerationOptions& options) {
  if (n < 1) throw InvalidArgument("enumeration needs n >= 1");
  if (n > options.cap) {
    throw CapExceeded("enumeration order " + std::to_string(n) + " exceeds cap " + std::to_string(options.cap));
  }
}

}  // namespace

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::vector<EnumeratedGraph>> enumerate_connected_levels(std::size_t max_n,
                                                                     const EnumerationOptions& options) {
  check_request(max_n, options);
  const unsigned workers = resolve_workers(options.workers);
  const std::size_t cap = std::max(options.cap, kDefaultCanonicalCap);
  std::vector<std::vector<EnumeratedGraph>> levels;
  Graph k1(1);
  levels.push_back({{canonical_form(k1, cap), k1}});
  while (levels.size() < max_n) levels.push_back(next_level(levels.back(), cap, workers));
  return levels;
}

std::vector<EnumeratedGraph> enumerate_connected(std::size_t n, const EnumerationOptions& options) {
  return std::move(enumerate_connected_levels(n, options).back());
}

std::vector<EnumeratedGraph> unique_connected(std::span<const Graph> source, std::size_t n,
                                              std::size_t canonical_cap) {
  std::vector<EnumeratedGraph> out;
  std::set<CanonicalLabel> seen;
  for (const Graph& g : source) {
    if (g.order() != n || !is_connected(g)) continue;
    Canonization c = canonize(g, {}, canonical_cap);
    if (seen.insert(c.label).second) out.push_back({std::move(c.label), std::move(c.graph)});
  }
  std::sort(out.begin(), out.end(), by_label);
  return out;
}

}  // namespace cei
