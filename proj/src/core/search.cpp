#include "cei/search.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "cei/constructions.hpp"
#include "cei/errors.hpp"
#include "parallel.hpp"

namespace cei {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<EnumeratedGraph> source_graphs(std::size_t n, const SearchOptions& options) {
  if (n > options.cap) {
    throw CapExceeded("order " + std::to_string(n) + " exceeds cap " + std::to_string(options.cap));
  }
  if (options.external) {
    return unique_connected(*options.external, n, std::max(options.cap, kDefaultCanonicalCap));
  }
  return enumerate_connected(n, {.cap = options.cap, .workers = options.workers});
}

std::vector<EnumeratedGraph> filter_members(std::vector<EnumeratedGraph> all, const ClassSpec& spec,
                                            unsigned workers) {
  std::vector<char> keep(all.size(), 0);
  detail::parallel_for(all.size(), workers, [&](std::size_t i) { keep[i] = is_member(all[i].graph, spec); });
  std::vector<EnumeratedGraph> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.push_back(std::move(all[i]));
  }
  return out;
}

std::vector<CanonicalLabel> distinct_labels(const std::vector<Graph>& graphs, std::size_t cap) {
  std::vector<CanonicalLabel> out;
  for (const Graph& g : graphs) out.push_back(canonical_form(g, cap));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VerificationReport verify(Theorem theorem, const ClassSpec& spec,
                          std::vector<std::pair<std::string, std::size_t>> params,
                          const std::vector<Graph>& predicted, const SearchOptions& options) {
  VerificationReport r;
  r.theorem = theorem;
  r.spec = spec;
  r.params = std::move(params);
  r.expected = distinct_labels(predicted, std::max(options.cap, kDefaultCanonicalCap));
  r.observed = max_cei_search(spec, options);
  if (r.observed.class_size == 0) {
    r.verdict = Verdict::EmptyClass;
  } else if (r.observed.maximizers == r.expected) {
    r.verdict = Verdict::Confirmed;
  } else {
    r.verdict = Verdict::Refuted;
    for (const auto& m : r.observed.maximizers) {
      if (!std::binary_search(r.expected.begin(), r.expected.end(), m)) {
        r.witness = m.graph6;
        break;
      }
    }
    if (!r.witness) {
      for (const auto& e : r.expected) {
        if (!std::binary_search(r.observed.maximizers.begin(), r.observed.maximizers.end(), e)) {
          r.witness = e.graph6;
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::T1: return "T1";
    case Theorem::T2: return "T2";
    case Theorem::T3: return "T3";
    case Theorem::Lemma1: return "LEMMA1";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "CONFIRMED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::EmptyClass: return "EMPTY_CLASS";
  }
  return "?";
}

Theorem parse_theorem(std::string_view text) {
  if (text == "T1" || text == "t1") return Theorem::T1;
  if (text == "T2" || text == "t2") return Theorem::T2;
  if (text == "T3" || text == "t3") return Theorem::T3;
  if (text == "LEMMA1" || text == "lemma1") return Theorem::Lemma1;
  throw InvalidArgument("unknown theorem '" + std::string(text) + "'");
}

Verdict parse_verdict(std::string_view text) {
  if (text == "CONFIRMED") return Verdict::Confirmed;
  if (text == "REFUTED") return Verdict::Refuted;
  if (text == "EMPTY_CLASS") return Verdict::EmptyClass;
  throw InvalidArgument("unknown verdict '" + std::string(text) + "'");
}

std::vector<EnumeratedGraph> enumerate_class(const ClassSpec& spec, const SearchOptions& options) {
  spec.validate();
  return filter_members(source_graphs(spec.n, options), spec, resolve_workers(options.workers));
}

SearchReport max_cei_search(const ClassSpec& spec, const SearchOptions& options) {
  const auto start = Clock::now();
  const unsigned workers = resolve_workers(options.workers);
  auto members = enumerate_class(spec, options);

  std::vector<Rational> values(members.size());
  detail::parallel_for(members.size(), workers, [&](std::size_t i) { values[i] = connective_eccentricity_index(members[i].graph); });

  SearchReport r;
  r.spec = spec;
  r.class_size = members.size();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (!r.max_cei || values[i] > *r.max_cei) {
      r.max_cei = values[i];
      r.maximizers.clear();
    }
    if (values[i] == *r.max_cei) r.maximizers.push_back(members[i].label);
  }
  // members are label-sorted, so maximizers already are.
  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationReport verify_theorem1(std::size_t n, std::size_t k, std::size_t d, const SearchOptions& options,
                                   Connectivity mode) {
  if (d < 3) throw Infeasible("d >= 3 violated, got d = " + std::to_string(d));
  std::vector<Graph> predicted;
  if (d % 2 == 0) {
    predicted.push_back(build_g_nkd(n, k, d));
  } else {
    predicted = enumerate_h_family(n, k, d);
  }
  ClassSpec spec{ClassKind::Diameter, n, k, d, mode};
  return verify(Theorem::T1, spec, {{"n", n}, {"k", k}, {"d", d}}, predicted, options);
}

VerificationReport verify_theorem2(std::size_t n, std::size_t k, std::size_t alpha, const SearchOptions& options,
                                   Connectivity mode) {
  std::vector<Graph> predicted{build_s_nalpha(n, k, alpha)};
  ClassSpec spec{ClassKind::Independence, n, k, alpha, mode};
  return verify(Theorem::T2, spec, {{"n", n}, {"k", k}, {"alpha", alpha}}, predicted, options);
}

VerificationReport verify_theorem3(std::size_t n, std::size_t k, std::size_t delta, const SearchOptions& options,
                                   Connectivity mode) {
  std::vector<Graph> predicted{build_m_ndelta(n, k, delta)};
  ClassSpec spec{ClassKind::MinDegree, n, k, delta, mode};
  return verify(Theorem::T3, spec, {{"n", n}, {"k", k}, {"delta", delta}}, predicted, options);
}

Lemma1Report check_lemma1(std::size_t max_n, const SearchOptions& options) {
  if (max_n < 2) throw InvalidArgument("lemma sweep needs max_n >= 2");
  if (max_n > options.cap) {
    throw CapExceeded("order " + std::to_string(max_n) + " exceeds cap " + std::to_string(options.cap));
  }
  const auto start = Clock::now();
  const unsigned workers = resolve_workers(options.workers);

  std::vector<EnumeratedGraph> graphs;
  if (options.external) {
    for (std::size_t n = 2; n <= max_n; ++n) {
      auto level = unique_connected(*options.external, n, std::max(options.cap, kDefaultCanonicalCap));
      std::move(level.begin(), level.end(), std::back_inserter(graphs));
    }
  } else {
    auto levels = enumerate_connected_levels(max_n, {.cap = options.cap, .workers = options.workers});
    for (std::size_t i = 1; i < levels.size(); ++i) {
      std::move(levels[i].begin(), levels[i].end(), std::back_inserter(graphs));
    }
  }

  struct Outcome {
    std::uint64_t pairs = 0;
    std::vector<Lemma1Violation> violations;
  };
  std::vector<Outcome> outcomes(graphs.size());
  detail::parallel_for(graphs.size(), workers, [&](std::size_t i) {
    const Graph& g = graphs[i].graph;
    const Rational before = connective_eccentricity_index(g);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) {
        if (g.adjacent(u, v)) continue;
        ++outcomes[i].pairs;
        if (!(connective_eccentricity_index(add_edge(g, u, v)) > before)) outcomes[i].violations.push_back({graphs[i].label.graph6, u, v});
      }
    }
  });

  Lemma1Report r;
  r.max_n = max_n;
  r.graphs_checked = graphs.size();
  for (auto& o : outcomes) {
    r.pairs_checked += o.pairs;
    std::move(o.violations.begin(), o.violations.end(), std::back_inserter(r.violations));
  }
  r.runtime_ms = elapsed_ms(start);
  return r;
}

}  // namespace cei
