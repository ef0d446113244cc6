#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cei/canonical.hpp"
#include "cei/enumerate.hpp"
#include "cei/invariants.hpp"
#include "cei/rational.hpp"

namespace cei {

struct SearchOptions {
  std::size_t cap = kDefaultEnumerationCap;
  unsigned workers = 0;
  // When set, graphs come from this source (deduplicated up to isomorphism)
  // instead of the built-in generator.
  std::optional<std::span<const Graph>> external;
};

struct SearchReport {
  ClassSpec spec;
  std::size_t class_size = 0;
  std::optional<Rational> max_cei;  // empty iff class_size == 0
  std::vector<CanonicalLabel> maximizers;  // sorted
  double runtime_ms = 0;
};

enum class Theorem { T1, T2, T3, Lemma1 };
enum class Verdict { Confirmed, Refuted, EmptyClass };

std::string_view to_string(Theorem t);
std::string_view to_string(Verdict v);
Theorem parse_theorem(std::string_view text);
Verdict parse_verdict(std::string_view text);

struct VerificationReport {
  Theorem theorem = Theorem::T1;
  ClassSpec spec;
  // Parameters in the order they were given, e.g. {"n",6},{"k",1},{"d",4}.
  std::vector<std::pair<std::string, std::size_t>> params;
  std::vector<CanonicalLabel> expected;  // sorted, distinct
  SearchReport observed;
  Verdict verdict = Verdict::EmptyClass;
  std::optional<std::string> witness;
};

struct Lemma1Violation {
  std::string graph6;
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Lemma1Violation&, const Lemma1Violation&) = default;
};

struct Lemma1Report {
  std::size_t max_n = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t pairs_checked = 0;
  std::vector<Lemma1Violation> violations;
  double runtime_ms = 0;

  bool holds() const { return violations.empty(); }
};

// Members of the class, one per isomorphism class, sorted by canonical label.
std::vector<EnumeratedGraph> enumerate_class(const ClassSpec& spec, const SearchOptions& options = {});

// Exact maximum CEI over the class and every maximizer up to isomorphism.
SearchReport max_cei_search(const ClassSpec& spec, const SearchOptions& options = {});

// Verdicts compare the observed maximizer set with the canonical forms of
// the predicted extremal graphs. A mismatch is reported with a witness.
// The diameter class is read as kappa >= k, the independence and min-degree
// classes as kappa = k; `mode` overrides either.
VerificationReport verify_theorem1(std::size_t n, std::size_t k, std::size_t d, const SearchOptions& options = {},
                                   Connectivity mode = Connectivity::AtLeast);
VerificationReport verify_theorem2(std::size_t n, std::size_t k, std::size_t alpha,
                                   const SearchOptions& options = {}, Connectivity mode = Connectivity::Exactly);
VerificationReport verify_theorem3(std::size_t n, std::size_t k, std::size_t delta,
                                   const SearchOptions& options = {}, Connectivity mode = Connectivity::Exactly);

// Adding any edge to a connected graph strictly increases CEI: checked on
// every connected graph of order 2..max_n and every non-adjacent pair.
Lemma1Report check_lemma1(std::size_t max_n, const SearchOptions& options = {});

}  // namespace cei
