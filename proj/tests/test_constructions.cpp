#include <doctest.h>

#include <set>

#include "cei/canonical.hpp"
#include "cei/constructions.hpp"
#include "cei/errors.hpp"
#include "cei/invariants.hpp"

using namespace cei;
using Sizes = std::vector<std::size_t>;

TEST_CASE("even-diameter chain G(n,k,d)") {
  CHECK(g_nkd_layers(6, 1, 4) == Sizes{1, 1, 2, 1, 1});
  Graph g = build_g_nkd(6, 1, 4);
  CHECK(g.order() == 6);
  CHECK(connective_eccentricity_index(g) == Rational(11, 2));

  CHECK(g_nkd_layers(8, 2, 4) == Sizes{1, 2, 2, 2, 1});
  Graph g8 = build_g_nkd(8, 2, 4);
  CHECK(diameter(g8) == 4);
  CHECK(vertex_connectivity(g8) == 2);

  CHECK(g_nkd_layers(12, 2, 6) == Sizes{1, 2, 2, 2, 2, 2, 1});
  CHECK_THROWS_AS(build_g_nkd(6, 1, 3), Infeasible);
  CHECK_THROWS_AS(build_g_nkd(6, 1, 2), Infeasible);
  CHECK_THROWS_AS(build_g_nkd(7, 2, 4), Infeasible);  // middle layer 1 < k
  CHECK_THROWS_WITH_AS(build_g_nkd(7, 2, 4), doctest::Contains("n-kd+2k-2"), Infeasible);
}

TEST_CASE("odd-diameter chains H(n,k,d,s)") {
  Graph h2 = build_h_nkd(8, 1, 3, 2);
  CHECK(h2 == sequential_join({complete_graph(1), complete_graph(3), complete_graph(3), complete_graph(1)}));
  CHECK(connective_eccentricity_index(h2) == Rational(20));
  Graph h0 = build_h_nkd(8, 1, 3, 0);
  CHECK(h0 == sequential_join({complete_graph(1), complete_graph(1), complete_graph(5), complete_graph(1)}));
  CHECK(connective_eccentricity_index(h0) == Rational(20));
  CHECK_THROWS_WITH_AS(build_h_nkd(7, 2, 3, 0), doctest::Contains("s >= k-1"), Infeasible);
  CHECK_THROWS_AS(build_h_nkd(7, 2, 3, 3), Infeasible);  // t = 0 < k-1
  CHECK_THROWS_AS(build_h_nkd(8, 1, 4, 0), Infeasible);
}

TEST_CASE("odd-diameter family") {
  auto family = enumerate_h_family(8, 1, 3);
  CHECK(family.size() == 5);
  CHECK(h_family_splits(8, 1, 3) == Sizes{0, 1, 2, 3, 4});
  std::set<CanonicalLabel> classes;
  for (const auto& g : family) {
    classes.insert(canonical_form(g));
    CHECK(connective_eccentricity_index(g) == Rational(20));
  }
  CHECK(classes.size() == 3);

  CHECK(h_family_splits(7, 2, 3) == Sizes{1, 2});
  std::set<CanonicalLabel> small;
  for (const auto& g : enumerate_h_family(7, 2, 3)) small.insert(canonical_form(g));
  CHECK(small.size() == 1);

  CHECK_THROWS_WITH_AS(enumerate_h_family(5, 2, 3), doctest::Contains("empty family"), Infeasible);
}

TEST_CASE("independence extremal graph S(n,k,alpha)") {
  Graph s = build_s_nalpha(6, 2, 2);
  CHECK(connective_eccentricity_index(s) == Rational(17));
  CHECK(independence_number(s) == 2);
  CHECK(vertex_connectivity(s) == 2);

  Graph boundary = build_s_nalpha(5, 2, 3);
  CHECK(boundary == join(complete_graph(2), copies(3, complete_graph(1))));
  CHECK(connective_eccentricity_index(boundary) == Rational(11));
  CHECK_THROWS_AS(build_s_nalpha(5, 2, 1), Infeasible);
  CHECK_THROWS_WITH_AS(build_s_nalpha(4, 2, 3), doctest::Contains("n >= k+alpha"), Infeasible);
}

TEST_CASE("min-degree extremal graph M(n,k,delta)") {
  Graph m = build_m_ndelta(6, 2, 3);
  CHECK(m == join(complete_graph(2), copies(2, complete_graph(2))));
  CHECK(connective_eccentricity_index(m) == Rational(16));
  Graph m7 = build_m_ndelta(7, 2, 2);
  CHECK(m7 == join(complete_graph(2), disjoint_union(complete_graph(1), complete_graph(4))));
  CHECK(connective_eccentricity_index(m7) == Rational(23));
  CHECK_THROWS_WITH_AS(build_m_ndelta(6, 1, 4), doctest::Contains("n >= 2*delta-k+2 = 9"), Infeasible);
  CHECK_THROWS_AS(build_m_ndelta(6, 3, 2), Infeasible);
}

TEST_CASE("params dispatch") {
  ConstructionParams p{.family = Family::HNKD, .n = 8, .k = 1, .d = 3, .s = 2};
  CHECK(build(p) == build_h_nkd(8, 1, 3, 2));
  p.s = 9;
  CHECK_THROWS_AS(p.validate(), Infeasible);
}

TEST_CASE("every feasible construction up to n = 10 lands in its class with kappa = k") {
  std::size_t built = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t d = 3; d < n; ++d) {
        if (d % 2 == 0) {
          Graph g;
          try {
            g = build_g_nkd(n, k, d);
          } catch (const Infeasible&) {
            continue;
          }
          ++built;
          CHECK(g.order() == n);
          CHECK(diameter(g) == d);
          CHECK(vertex_connectivity(g) == k);
          CHECK(is_member(g, {ClassKind::Diameter, n, k, d, Connectivity::Exactly}));
        } else {
          std::vector<Graph> family;
          try {
            family = enumerate_h_family(n, k, d);
          } catch (const Infeasible&) {
            continue;
          }
          const Rational first = connective_eccentricity_index(family.front());
          auto splits = h_family_splits(n, k, d);
          for (std::size_t i = 0; i < family.size(); ++i) {
            const Graph& g = family[i];
            ++built;
            CHECK(g.order() == n);
            CHECK(diameter(g) == d);
            CHECK(is_member(g, {ClassKind::Diameter, n, k, d}));
            CHECK(connective_eccentricity_index(g) == first);
            // With d = 3 there are no k-layers: the two middle cliques are
            // the only cuts.
            const std::size_t s = splits[i];
            const std::size_t t = n + 3 * k - k * d - 4 - s;
            const std::size_t kappa = d >= 5 ? k : std::min(s, t) + 1;
            CHECK(vertex_connectivity(g) == kappa);
          }
        }
      }
      for (std::size_t alpha = 2; k + alpha <= n; ++alpha) {
        Graph g = build_s_nalpha(n, k, alpha);
        ++built;
        CHECK(g.order() == n);
        CHECK(independence_number(g) == alpha);
        CHECK(vertex_connectivity(g) == k);
        CHECK(is_member(g, {ClassKind::Independence, n, k, alpha, Connectivity::Exactly}));
      }
      for (std::size_t delta = k; n >= k + 2 && n + k >= 2 * delta + 2; ++delta) {
        Graph g = build_m_ndelta(n, k, delta);
        ++built;
        CHECK(g.order() == n);
        CHECK(min_degree(g) == delta);
        CHECK(vertex_connectivity(g) == k);
        CHECK(diameter(g) == 2);
        CHECK(is_member(g, {ClassKind::MinDegree, n, k, delta, Connectivity::Exactly}));
      }
    }
  }
  CHECK(built > 100);
}
