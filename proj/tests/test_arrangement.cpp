#include <algorithm>

#include "doctest.h"
#include "invarr/arrangement.hpp"
#include "invarr/oracles.hpp"
#include "invarr/orders.hpp"
#include "invarr/patterns.hpp"
#include "invarr/rook.hpp"

using namespace invarr;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }
QPolynomial Q(std::vector<std::uint64_t> c) { return QPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("inversion_graph") {
  CHECK(inversion_graph(Permutation::identity(5)).edge_count() == 0);
  CHECK(inversion_graph(Permutation::longest(5)).edge_count() == 10);
  const auto g = inversion_graph(P("25134"));
  CHECK(g.n == 5);
  CHECK(g.edges.pairs() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}, {2, 5}});
}

TEST_CASE("chromatic polynomial of small graphs") {
  CHECK(chromatic_polynomial(inversion_graph(P("321"))) == ChromaticPolynomial{0, 2, -3, 1});
  // Path 1-3-2 for 312... G_312 has edges 1-2, 1-3.
  CHECK(chromatic_polynomial(inversion_graph(P("312"))) == ChromaticPolynomial{0, 1, -2, 1});
  CHECK(chromatic_polynomial(inversion_graph(Permutation::identity(3))) == ChromaticPolynomial{0, 0, 0, 1});
  // 4-cycle: (x-1)^4 + (x-1).
  const auto c4 = InversionGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(chromatic_polynomial(c4) == ChromaticPolynomial{0, -3, 6, -4, 1});
}

TEST_CASE("count_acyclic_orientations") {
  CHECK(count_acyclic_orientations(inversion_graph(Permutation::identity(6))) == 1);
  CHECK(count_acyclic_orientations(inversion_graph(P("321"))) == 6);
  CHECK(count_acyclic_orientations(inversion_graph(P("25134"))) == 16);
  CHECK(count_acyclic_orientations(InversionGraph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) == 14);
  for (int n = 1; n <= 12; ++n) {
    CHECK(count_acyclic_orientations(inversion_graph(Permutation::longest(n))) == factorial(n));
  }
  CHECK_THROWS_AS(count_acyclic_orientations(inversion_graph(Permutation::identity(13))), std::invalid_argument);
}

TEST_CASE("deletion-contraction equals enumeration on every connected graph with at most 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) slots.emplace_back(i, j);
    }
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      for (std::size_t e = 0; e < slots.size(); ++e) {
        if (mask >> e & 1U) edges.push_back(slots[e]);
      }
      const auto g = InversionGraph::from_edges(n, edges);
      // Connectivity by repeated relaxation.
      std::vector<bool> seen(n + 1, false);
      seen[1] = true;
      for (int round = 0; round < n; ++round) {
        for (auto [a, b] : edges) {
          if (seen[a] || seen[b]) seen[a] = seen[b] = true;
        }
      }
      if (std::count(seen.begin() + 1, seen.end(), true) != n) continue;
      REQUIRE(count_acyclic_orientations(g) == oracle::acyclic_orientations_by_enumeration(g));
    }
  }
}

TEST_CASE("deletion-contraction equals enumeration on seeded random graphs") {
  const auto graphs = oracle::seeded_random_graphs(50, 8, 16, 7);
  CHECK(graphs.size() == 50);
  for (const auto& g : graphs) {
    REQUIRE(g.edge_count() <= 16);
    REQUIRE(count_acyclic_orientations(g) == oracle::acyclic_orientations_by_enumeration(g));
  }
  // Fixed seed, fixed stream.
  CHECK(oracle::seeded_random_graphs(5, 8, 16, 7)[3].edges == graphs[3].edges);
}

TEST_CASE("regions") {
  CHECK(regions(Permutation::identity(4)).size() == 1);
  CHECK(regions(Permutation::longest(4)).size() == 24);
  const RegionSet r = regions(P("25134"));
  CHECK(r.size() == 16);
  CHECK(r.hyperplanes.size() == 4);
  CHECK_THROWS_AS(regions(P("123456789")), std::invalid_argument);
}

TEST_CASE("distance_enumerator") {
  CHECK(distance_enumerator(Permutation::identity(3)) == QPolynomial::one());
  CHECK(distance_enumerator(P("321")) == Q({1, 2, 2, 1}));
  CHECK(distance_enumerator(P("312")) == Q({1, 2, 1}));
  CHECK(distance_enumerator(P("312")) == bruhat_interval(P("312")).poincare);
  CHECK(distance_enumerator(P("25134")) == Q({1, 4, 6, 4, 1}));
  // 3412 contains 3412: same size, different grading.
  CHECK(distance_enumerator(P("3412")) == Q({1, 4, 4, 4, 1}));
  CHECK(bruhat_interval(P("3412")).poincare == Q({1, 3, 5, 4, 1}));
}

TEST_CASE("regions equal acyclic orientations, and ao is invariant under inversion") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const RegionSet r = regions(w);
      const std::uint64_t ao = count_acyclic_orientations(inversion_graph(w));
      REQUIRE(r.size() == ao);
      REQUIRE(distance_enumerator(r).at_one() == ao);
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      REQUIRE(count_acyclic_orientations(inversion_graph(w)) == count_acyclic_orientations(inversion_graph(inverse(w))));
    }
  }
}

TEST_CASE("braid arrangement: distance enumerator is the weak Poincare polynomial of w0") {
  for (int n = 1; n <= 6; ++n) {
    const Permutation w0 = Permutation::longest(n);
    CHECK(distance_enumerator(w0) == weak_interval(w0).poincare);
  }
}

TEST_CASE("distance enumerator equals the Bruhat polynomial exactly on smooth permutations") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      REQUIRE((distance_enumerator(w) == bruhat_interval(w).poincare) == avoids_all(w, patterns::smooth()));
    }
  }
}

TEST_CASE("ao equals rk on sampled permutations up to the n = 12 cap") {
  for (int n = 8; n <= 12; ++n) {
    const std::uint64_t total = factorial(n);
    for (std::uint64_t k = 0; k < 40; ++k) {
      const Permutation w = nth_permutation(n, (k * (total / 40) + k * 7919) % total);
      REQUIRE(count_acyclic_orientations(inversion_graph(w)) == rook_count(w));
    }
  }
}
