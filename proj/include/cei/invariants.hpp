#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cei/graph.hpp"
#include "cei/rational.hpp"

namespace cei {

struct VertexProfile {
  std::size_t degree = 0;
  std::size_t eccentricity = 0;
};

struct InvariantSummary {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t radius = 0;
  std::size_t diameter = 0;
  std::size_t connectivity = 0;
  std::size_t independence_number = 0;
  Rational cei;
  std::uint64_t eci = 0;

  friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

enum class ClassKind { Diameter, Independence, MinDegree };

// How the class constrains connectivity: kappa >= k ("k-connected") or
// kappa = k (fixed connectivity, the setting of the extremal results).
enum class Connectivity { AtLeast, Exactly };

std::string_view to_string(ClassKind kind);
ClassKind parse_class_kind(std::string_view text);
std::string_view to_string(Connectivity mode);
Connectivity parse_connectivity(std::string_view text);

/// One of the parameterised classes of k-connected graphs of order n:
/// diameter exactly `value`, independence number exactly `value`, or minimum
/// degree at least `value`.
struct ClassSpec {
  ClassKind kind = ClassKind::Diameter;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t value = 0;
  Connectivity connectivity = Connectivity::AtLeast;

  // Throws InvalidArgument when the spec is malformed.
  void validate() const;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

std::vector<std::size_t> degrees(const Graph& g);

// One BFS per vertex. Throws NotConnected.
std::vector<std::size_t> eccentricities(const Graph& g);
std::vector<VertexProfile> vertex_profiles(const Graph& g);

std::size_t diameter(const Graph& g);
std::size_t radius(const Graph& g);

// Connective eccentricity index: sum over v of deg(v) / ecc(v), exactly.
// Requires a connected graph with n >= 2.
Rational connective_eccentricity_index(const Graph& g);

// Eccentric connectivity index: sum over v of deg(v) * ecc(v).
std::uint64_t eccentric_connectivity_index(const Graph& g);

// n-1 for complete graphs; otherwise the minimum over non-adjacent pairs of
// the number of internally vertex-disjoint paths (unit-capacity max flow on
// the vertex-split digraph).
std::size_t vertex_connectivity(const Graph& g);

// kappa(g) >= k, stopping each flow once k paths are found.
bool is_k_connected(const Graph& g, std::size_t k);

// Exact, by branch and bound with a greedy clique-cover bound.
std::size_t independence_number(const Graph& g);

std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

InvariantSummary summarize(const Graph& g);

// Requires a connected g with order spec.n.
bool is_member(const Graph& g, const ClassSpec& spec);

}  // namespace cei
