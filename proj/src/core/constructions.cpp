#include "cei/constructions.hpp"

#include <string>

#include "cei/errors.hpp"

namespace cei {

namespace {

using Signed = long long;

Signed as_signed(std::size_t v) { return static_cast<Signed>(v); }

// K_m, with K_0 as the empty graph.
Graph clique(std::size_t m) { return m == 0 ? Graph() : complete_graph(m); }

Graph chain(const std::vector<std::size_t>& layers) {
  std::vector<Graph> parts;
  parts.reserve(layers.size());
  for (auto size : layers) parts.push_back(clique(size));
  return sequential_join(parts);
}

[[noreturn]] void infeasible(const std::string& what) { throw Infeasible(what); }

void check_diameter_family(std::size_t k, std::size_t d, bool even) {
  if (k < 1) infeasible("k >= 1 violated");
  if (even && (d % 2 != 0 || d < 4)) infeasible("d must be even with d >= 4, got d = " + std::to_string(d));
  if (!even && (d % 2 != 1 || d < 3)) infeasible("d must be odd with d >= 3, got d = " + std::to_string(d));
}

// s + t for the odd-diameter family.
Signed h_split_total(std::size_t n, std::size_t k, std::size_t d) {
  return as_signed(n) - as_signed(k) * as_signed(d) + 3 * as_signed(k) - 4;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::GNKD: return "g-nkd";
    case Family::HNKD: return "h-nkd";
    case Family::SNAlpha: return "s-alpha";
    case Family::MNDelta: return "m-delta";
  }
  return "?";
}

void ConstructionParams::validate() const {
  switch (family) {
    case Family::GNKD: g_nkd_layers(n, k, d); return;
    case Family::HNKD: h_nkd_layers(n, k, d, s); return;
    case Family::SNAlpha:
      if (alpha < 2) infeasible("alpha >= 2 violated, got alpha = " + std::to_string(alpha));
      if (k < 1) infeasible("k >= 1 violated");
      if (n < k + alpha) {
        infeasible("n >= k+alpha = " + std::to_string(k + alpha) + " violated, got n = " + std::to_string(n));
      }
      return;
    case Family::MNDelta:
      if (k < 1) infeasible("k >= 1 violated");
      if (delta < k) infeasible("delta >= k violated, got delta = " + std::to_string(delta));
      if (n < k + 2) infeasible("n >= k+2 = " + std::to_string(k + 2) + " violated, got n = " + std::to_string(n));
      if (as_signed(n) < 2 * as_signed(delta) - as_signed(k) + 2) {
        infeasible("n >= 2*delta-k+2 = " + std::to_string(2 * as_signed(delta) - as_signed(k) + 2) +
                   " violated, got n = " + std::to_string(n));
      }
      return;
  }
}

std::vector<std::size_t> g_nkd_layers(std::size_t n, std::size_t k, std::size_t d) {
  check_diameter_family(k, d, true);
  const Signed middle = as_signed(n) - as_signed(k) * as_signed(d) + 2 * as_signed(k) - 2;
  if (middle < as_signed(k)) {
    infeasible("middle layer n-kd+2k-2 = " + std::to_string(middle) + " must be >= k = " + std::to_string(k));
  }
  const std::size_t side = (d - 2) / 2;
  std::vector<std::size_t> layers{1};
  layers.insert(layers.end(), side, k);
  layers.push_back(static_cast<std::size_t>(middle));
  layers.insert(layers.end(), side, k);
  layers.push_back(1);
  return layers;
}

Graph build_g_nkd(std::size_t n, std::size_t k, std::size_t d) { return chain(g_nkd_layers(n, k, d)); }

std::vector<std::size_t> h_nkd_layers(std::size_t n, std::size_t k, std::size_t d, std::size_t s) {
  check_diameter_family(k, d, false);
  const Signed t = h_split_total(n, k, d) - as_signed(s);
  if (as_signed(s) < as_signed(k) - 1) {
    infeasible("s >= k-1 = " + std::to_string(k - 1) + " violated, got s = " + std::to_string(s));
  }
  if (t < as_signed(k) - 1) {
    infeasible("t = n-kd+3k-4-s = " + std::to_string(t) + " must be >= k-1 = " + std::to_string(k - 1));
  }
  const std::size_t side = (d - 3) / 2;
  std::vector<std::size_t> layers{1};
  layers.insert(layers.end(), side, k);
  layers.push_back(s + 1);
  layers.push_back(static_cast<std::size_t>(t) + 1);
  layers.insert(layers.end(), side, k);
  layers.push_back(1);
  return layers;
}

Graph build_h_nkd(std::size_t n, std::size_t k, std::size_t d, std::size_t s) {
  return chain(h_nkd_layers(n, k, d, s));
}

std::vector<std::size_t> h_family_splits(std::size_t n, std::size_t k, std::size_t d) {
  check_diameter_family(k, d, false);
  const Signed total = h_split_total(n, k, d);
  const Signed lo = as_signed(k) - 1;
  const Signed hi = total - lo;
  if (hi < lo) {
    infeasible("empty family: s+t = n-kd+3k-4 = " + std::to_string(total) + " must be >= 2(k-1) = " +
               std::to_string(2 * lo));
  }
  std::vector<std::size_t> out;
  for (Signed s = lo; s <= hi; ++s) out.push_back(static_cast<std::size_t>(s));
  return out;
}

std::vector<Graph> enumerate_h_family(std::size_t n, std::size_t k, std::size_t d) {
  std::vector<Graph> out;
  for (auto s : h_family_splits(n, k, d)) out.push_back(build_h_nkd(n, k, d, s));
  return out;
}

Graph build_s_nalpha(std::size_t n, std::size_t k, std::size_t alpha) {
  ConstructionParams{.family = Family::SNAlpha, .n = n, .k = k, .alpha = alpha}.validate();
  Graph inner = join(clique(n - k - alpha), copies(alpha - 1, complete_graph(1)));
  return join(complete_graph(k), disjoint_union(complete_graph(1), inner));
}

Graph build_m_ndelta(std::size_t n, std::size_t k, std::size_t delta) {
  ConstructionParams{.family = Family::MNDelta, .n = n, .k = k, .delta = delta}.validate();
  return join(complete_graph(k), disjoint_union(clique(delta - k + 1), clique(n - delta - 1)));
}

Graph build(const ConstructionParams& p) {
  switch (p.family) {
    case Family::GNKD: return build_g_nkd(p.n, p.k, p.d);
    case Family::HNKD: return build_h_nkd(p.n, p.k, p.d, p.s);
    case Family::SNAlpha: return build_s_nalpha(p.n, p.k, p.alpha);
    case Family::MNDelta: return build_m_ndelta(p.n, p.k, p.delta);
  }
  throw InvalidArgument("unknown family");
}

}  // namespace cei
