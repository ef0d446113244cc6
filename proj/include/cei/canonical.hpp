#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cei/graph.hpp"

namespace cei {

inline constexpr std::size_t kDefaultCanonicalCap = 10;
// Hard limit of the single-word row representation used during search.
inline constexpr std::size_t kMaxCanonicalOrder = 64;

/// graph6 text of the canonical relabeling. Equal labels iff isomorphic.
struct CanonicalLabel {
  std::string graph6;

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

struct Canonization {
  CanonicalLabel label;
  // order[i] is the input vertex placed at canonical position i.
  std::vector<Vertex> order;
  Graph graph;
};

// Canonical relabeling: the lexicographically smallest graph6 bit string over
// all leaves of an individualize-and-refine search. Optional `colors` give an
// initial ordered partition (smaller colour first); the search then only
// ranges over colour-preserving relabelings. Throws CapExceeded when
// order() > cap.
Canonization canonize(const Graph& g, std::span<const int> colors = {},
                      std::size_t cap = kDefaultCanonicalCap);

CanonicalLabel canonical_form(const Graph& g, std::size_t cap = kDefaultCanonicalCap);

// True iff some automorphism of g maps a to b.
bool same_orbit(const Graph& g, Vertex a, Vertex b, std::size_t cap = kDefaultCanonicalCap);

}  // namespace cei
