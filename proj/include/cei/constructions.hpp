#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "cei/graph.hpp"

namespace cei {

enum class Family { GNKD, HNKD, SNAlpha, MNDelta };

std::string_view to_string(Family family);

struct ConstructionParams {
  Family family = Family::GNKD;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  std::size_t s = 0;
  std::size_t alpha = 0;
  std::size_t delta = 0;

  // Throws Infeasible naming the first violated bound.
  void validate() const;
};

// Layer sizes of the even-diameter chain
//   K_1, k,...,k, n-kd+2k-2, k,...,k, K_1  with (d-2)/2 k-layers per side.
std::vector<std::size_t> g_nkd_layers(std::size_t n, std::size_t k, std::size_t d);
Graph build_g_nkd(std::size_t n, std::size_t k, std::size_t d);

// Layer sizes of the odd-diameter chain
//   K_1, k,...,k, s+1, t+1, k,...,k, K_1  with t = n-kd+3k-4-s.
std::vector<std::size_t> h_nkd_layers(std::size_t n, std::size_t k, std::size_t d, std::size_t s);
Graph build_h_nkd(std::size_t n, std::size_t k, std::size_t d, std::size_t s);

// Valid split values s, ascending.
std::vector<std::size_t> h_family_splits(std::size_t n, std::size_t k, std::size_t d);
// One graph per split; isomorphic (s,t)/(t,s) pairs are both kept.
std::vector<Graph> enumerate_h_family(std::size_t n, std::size_t k, std::size_t d);

// K_k v (K_1 u (K_{n-k-alpha} v (alpha-1)K_1)); K_k v alpha K_1 when n = k+alpha.
Graph build_s_nalpha(std::size_t n, std::size_t k, std::size_t alpha);

// K_k v (K_{delta-k+1} u K_{n-delta-1}).
Graph build_m_ndelta(std::size_t n, std::size_t k, std::size_t delta);

Graph build(const ConstructionParams& params);

}  // namespace cei
