#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cei/canonical.hpp"
#include "cei/graph.hpp"

namespace cei {

inline constexpr std::size_t kDefaultEnumerationCap = 9;

struct EnumerationOptions {
  std::size_t cap = kDefaultEnumerationCap;
  // 0 selects the available hardware parallelism.
  unsigned workers = 0;
};

struct EnumeratedGraph {
  CanonicalLabel label;
  // The canonical relabeling itself.
  Graph graph;
};

unsigned resolve_workers(unsigned requested);

// One representative per isomorphism class of connected graphs on n
// vertices, sorted by canonical label. Generated by canonical augmentation:
// a child is kept only when its new vertex lies in the automorphism orbit of
// the canonically chosen non-cut vertex. Throws CapExceeded when n > cap.
std::vector<EnumeratedGraph> enumerate_connected(std::size_t n, const EnumerationOptions& options = {});

// Every level 1..max_n; element i holds the graphs of order i+1.
std::vector<std::vector<EnumeratedGraph>> enumerate_connected_levels(std::size_t max_n,
                                                                     const EnumerationOptions& options = {});

// Connected graphs of order n from an arbitrary source, one per
// isomorphism class, sorted by canonical label. Other orders and
// disconnected graphs are skipped.
std::vector<EnumeratedGraph> unique_connected(std::span<const Graph> source, std::size_t n,
                                              std::size_t canonical_cap = kDefaultCanonicalCap);

}  // namespace cei
