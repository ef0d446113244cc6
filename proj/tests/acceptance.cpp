// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fail.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cei/canonical.hpp"
#include "cei/constructions.hpp"
#include "cei/enumerate.hpp"
#include "cei/errors.hpp"
#include "cei/graph6.hpp"
#include "cei/invariants.hpp"
#include "cei/search.hpp"
#include "oracles.hpp"

using namespace cei;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << "failed: " << what << "; ";
    ok = ok && cond;
  }
};

using Check = std::function<void(Outcome&)>;

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  Check body;
};

SearchOptions opts() { return SearchOptions{.workers = 0}; }

std::string labels(const std::vector<CanonicalLabel>& ls) {
  std::string out;
  for (const auto& l : ls) out += (out.empty() ? "" : ",") + l.graph6;
  return out;
}

void closed_forms(Outcome& o) {
  for (std::size_t n = 2; n <= 12; ++n) {
    auto n64 = static_cast<std::int64_t>(n);
    o.expect(connective_eccentricity_index(complete_graph(n)) == Rational(n64 * (n64 - 1)),
             "cei(K_" + std::to_string(n) + ")");
  }
  o.expect(connective_eccentricity_index(cycle_graph(5)) == Rational(5), "cei(C_5) = 5");
  o.expect(connective_eccentricity_index(path_graph(4)) == Rational(8, 3), "cei(P_4) = 8/3");
  o.expect(eccentric_connectivity_index(path_graph(4)) == 14, "eci(P_4) = 14");
  o.detail << "K_2..K_12, C_5, P_4 exact";
}

void lemma_sweep(Outcome& o) {
  Lemma1Report r = check_lemma1(7, opts());
  o.expect(r.holds(), "no violations");
  o.expect(r.graphs_checked == 1 + 2 + 6 + 21 + 112 + 853, "graph count for orders 2..7");
  o.detail << r.graphs_checked << " graphs, " << r.pairs_checked << " non-adjacent pairs, "
           << r.violations.size() << " violations";
}

void t1_even(Outcome& o) {
  for (auto [n, k] : {std::pair{6, 1}, std::pair{8, 2}}) {
    VerificationReport r = verify_theorem1(n, k, 4, opts());
    std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + ",4)";
    o.expect(r.verdict == Verdict::Confirmed, tag + " confirmed");
    o.expect(r.observed.maximizers.size() == 1, tag + " unique maximizer");
    o.expect(r.observed.maximizers == std::vector{canonical_form(build_g_nkd(n, k, 4))}, tag + " maximizer is G(n,k,d)");
    if (n == 6) o.expect(r.observed.max_cei == Rational(11, 2), "(6,1,4) maximum 11/2");
    o.detail << tag << " class " << r.observed.class_size << " max " << r.observed.max_cei->str() << "; ";
  }
}

void t1_odd(Outcome& o) {
  VerificationReport r = verify_theorem1(8, 1, 3, opts());
  o.expect(r.verdict == Verdict::Confirmed, "(8,1,3) confirmed");
  o.expect(r.expected.size() == 3, "(8,1,3) family has 3 classes");
  o.expect(r.observed.maximizers == r.expected, "(8,1,3) maximizers equal the family");
  o.expect(r.observed.max_cei == Rational(20), "(8,1,3) maximum 20");
  for (const Graph& h : enumerate_h_family(8, 1, 3))
    o.expect(connective_eccentricity_index(h) == Rational(20), "every family member has CEI 20");
  o.detail << "(8,1,3) class " << r.observed.class_size << " maximizers " << labels(r.observed.maximizers) << "; ";

  r = verify_theorem1(7, 2, 3, opts());
  o.expect(r.verdict == Verdict::Confirmed, "(7,2,3) confirmed");
  o.expect(r.expected.size() == 1 && r.observed.maximizers == r.expected, "(7,2,3) single class");
  o.detail << "(7,2,3) class " << r.observed.class_size << " max " << r.observed.max_cei->str();
}

void h_equality(Outcome& o) {
  std::size_t tuples = 0, members = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t d = 3; d < n; d += 2) {
        std::vector<Graph> family;
        try {
          family = enumerate_h_family(n, k, d);
        } catch (const Infeasible&) {
          continue;
        }
        if (family.empty()) continue;
        ++tuples;
        members += family.size();
        const Rational first = connective_eccentricity_index(family.front());
        for (const Graph& h : family)
          o.expect(connective_eccentricity_index(h) == first,
                   "equal CEI in H(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ")");
      }
    }
  }
  o.expect(tuples > 0, "some feasible tuples");
  o.detail << tuples << " feasible (n,k,d), " << members << " members";
}

template <class Verify, class Build>
void singleton_theorem(Outcome& o, const char* name, std::vector<std::array<std::size_t, 3>> cases,
                       std::map<std::size_t, Rational> maxima, Verify verify, Build build) {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto [n, k, p] = cases[i];
    VerificationReport r = verify(n, k, p);
    std::string tag = std::string(name) + "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(p) + ")";
    o.expect(r.verdict == Verdict::Confirmed, tag + " confirmed");
    o.expect(r.observed.maximizers == std::vector{canonical_form(build(n, k, p))}, tag + " singleton maximizer");
    if (maxima.count(i)) o.expect(r.observed.max_cei == maxima.at(i), tag + " maximum " + maxima.at(i).str());
    o.detail << tag << " class " << r.observed.class_size << " max "
             << (r.observed.max_cei ? r.observed.max_cei->str() : "-") << "; ";
  }
}

void theorem2(Outcome& o) {
  singleton_theorem(
      o, "", {{6, 2, 2}, {5, 2, 3}, {7, 1, 3}}, {{0, Rational(17)}},
      [](std::size_t n, std::size_t k, std::size_t a) { return verify_theorem2(n, k, a, opts()); }, build_s_nalpha);
}

void theorem3(Outcome& o) {
  singleton_theorem(
      o, "", {{6, 2, 3}, {7, 2, 2}, {7, 1, 2}}, {{0, Rational(16)}, {1, Rational(23)}},
      [](std::size_t n, std::size_t k, std::size_t d) { return verify_theorem3(n, k, d, opts()); }, build_m_ndelta);
}

void enumeration_oracle(Outcome& o) {
  for (std::size_t n = 4; n <= 6; ++n) {
    std::set<std::uint64_t> oracle;
    for (const Graph& g : oracle::dumb_connected(n)) oracle.insert(oracle::brute_canonical_key(g));
    auto fast = enumerate_connected(n, {.workers = 0});
    std::set<std::uint64_t> mine;
    for (const auto& e : fast) mine.insert(oracle::brute_canonical_key(e.graph));
    o.expect(fast.size() == oracle.size(), "count at n = " + std::to_string(n));
    o.expect(mine == oracle, "same isomorphism classes at n = " + std::to_string(n));
    o.detail << "n=" << n << ": " << fast.size() << " vs oracle " << oracle.size() << "; ";
  }
}

void invariant_oracles(Outcome& o) {
  std::size_t kappa_checked = 0;
  // Connectivity is defined from n = 2 on.
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : oracle::dumb_connected(n)) {
      ++kappa_checked;
      o.expect(vertex_connectivity(g) == oracle::brute_connectivity(g), "kappa on " + to_graph6(g));
    }
  }
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + rng() % 14;
    Graph g = oracle::random_graph(n, 0.1 + 0.8 * (rng() % 1000) / 1000.0, rng);
    o.expect(independence_number(g) == oracle::brute_independence(g), "alpha on " + to_graph6(g));
  }
  for (int i = 0; i < 1000; ++i) {
    std::size_t n = 1 + rng() % 40;
    Graph g = oracle::random_connected(n, 0.02 + 0.5 * (rng() % 1000) / 1000.0, rng);
    o.expect(eccentricities(g) == oracle::apsp_eccentricities(g), "eccentricities on " + to_graph6(g));
  }
  o.detail << kappa_checked << " connected graphs n = 2..6 for kappa, 200 random for alpha, 1000 for eccentricity";
}

void graph6_round_trip(Outcome& o) {
  std::size_t count = 0;
  for (const auto& level : enumerate_connected_levels(7, {.workers = 0})) {
    for (const auto& e : level) {
      ++count;
      const std::string text = to_graph6(e.graph);
      o.expect(from_graph6(text) == e.graph, "decode(encode(g)) on " + text);
      o.expect(to_graph6(from_graph6(text)) == text, "encode(decode(s)) on " + text);
    }
  }
  o.expect(count == 1 + 1 + 2 + 6 + 21 + 112 + 853, "corpus size");
  o.detail << count << " graphs";
}

std::pair<std::string, int> run_cli(const std::string& args) {
  std::string cmd = std::string(CEI_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

void determinism(Outcome& o) {
  const unsigned max_workers = std::max(1u, std::thread::hardware_concurrency());
  // Also force a multi-threaded run on small machines.
  std::set<unsigned> counts = {max_workers, std::max(4u, max_workers)};
  const char* runs[] = {"verify t1 --n 8 --k 1 --d 3", "verify t1 --n 6 --k 1 --d 4", "verify t2 --n 7 --k 1 --alpha 3",
                        "verify t3 --n 7 --k 2 --delta 2"};
  for (const char* args : runs) {
    auto [serial, code] = run_cli(std::string(args) + " --no-timing --workers 1");
    o.expect(code == 0 && !serial.empty(), std::string(args) + " ran");
    for (unsigned w : counts) {
      auto [parallel, pcode] = run_cli(std::string(args) + " --no-timing --workers " + std::to_string(w));
      o.expect(pcode == code && parallel == serial, std::string(args) + " identical at " + std::to_string(w) + " workers");
    }
  }
  o.detail << "workers 1 vs";
  for (unsigned w : counts) o.detail << " " << w;
  o.detail << " (hardware " << max_workers << ")";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed-form CEI/ECI values", 1, closed_forms},
      {2, "edge-addition lemma over all connected graphs n <= 7", 300, lemma_sweep},
      {3, "diameter theorem, even d: (6,1,4) and (8,2,4)", 600, t1_even},
      {4, "diameter theorem, odd d: (8,1,3) and (7,2,3)", 600, t1_odd},
      {5, "odd-diameter family has equal CEI for n <= 10", 10, h_equality},
      {6, "independence theorem: (6,2,2), (5,2,3), (7,1,3)", 300, theorem2},
      {7, "min-degree theorem: (6,2,3), (7,2,2), (7,1,2)", 300, theorem3},
      {8, "enumeration equals brute-force oracle for n = 4, 5, 6", 120, enumeration_oracle},
      {9, "connectivity, independence and eccentricity oracles", 300, invariant_oracles},
      {10, "graph6 round trip over connected graphs n <= 7", 60, graph6_round_trip},
      {11, "CLI verify output identical across worker counts", 600, determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail << " over time limit " << c.limit_s << " s";
    }
    failures += !o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " [" << timing << "] "
              << o.detail.str() << '\n'
              << std::flush;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}
