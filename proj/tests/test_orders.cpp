#include <algorithm>

#include "doctest.h"
#include "invarr/oracles.hpp"
#include "invarr/orders.hpp"
#include "invarr/patterns.hpp"

using namespace invarr;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }
QPolynomial Q(std::vector<std::uint64_t> c) { return QPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("QPolynomial arithmetic") {
  CHECK(QPolynomial::q_integer(3) == Q({1, 1, 1}));
  CHECK(QPolynomial::q_integer(0).is_zero());
  CHECK(QPolynomial::q_integer(3) * QPolynomial::q_integer(2) == Q({1, 2, 2, 1}));
  CHECK(Q({1, 2, 0, 0}).degree() == 1);
  CHECK(Q({1, 2, 2, 1}).at_one() == 6);
  CHECK(Q({1, 2, 2, 1}).to_string() == "1 + 2q + 2q^2 + q^3");
  CHECK(Q({0, 1}).to_string() == "q");
  CHECK(QPolynomial().to_string() == "0");
  CHECK_THROWS_AS(Q({~std::uint64_t{0}}) + Q({1}), std::overflow_error);
}

TEST_CASE("weak_leq") {
  for (const Permutation& w : all_permutations(4)) CHECK(weak_leq(Permutation::identity(4), w));
  CHECK(weak_leq(P("13245"), P("25134")));
  CHECK_FALSE(weak_leq(P("21345"), P("25134")));
  CHECK_THROWS_AS(weak_leq(P("21"), P("321")), std::invalid_argument);
}

TEST_CASE("weak_interval") {
  const IntervalSummary id = weak_interval(Permutation::identity(5));
  CHECK(id.size == 1);
  CHECK(id.poincare == QPolynomial::one());

  const auto members = weak_interval_members(P("25134"));
  std::vector<Permutation> expected{P("12345"), P("13245"), P("14235"), P("15234"),
                                    P("23145"), P("24135"), P("25134")};
  CHECK(members == expected);
  const IntervalSummary s = weak_interval(P("25134"));
  CHECK(s.size == 7);
  CHECK(s.poincare == Q({1, 1, 2, 2, 1}));
  CHECK(s.max_length == 4);

  const IntervalSummary top = weak_interval(P("321"));
  CHECK(top.size == 6);
  CHECK(top.poincare == Q({1, 2, 2, 1}));

  CHECK_THROWS_AS(weak_interval(parse_permutation("1,2,3,4,5,6,7,8,9,10,11,12,13")), std::invalid_argument);
}

TEST_CASE("bruhat_leq") {
  const Permutation w = P("25134");
  CHECK(bruhat_leq(Permutation::identity(5), w));
  CHECK_FALSE(bruhat_leq(w, Permutation::identity(5)));
  CHECK(bruhat_leq(P("21345"), w));
  CHECK(bruhat_leq(P("23145"), w));
  CHECK(weak_leq(P("23145"), w));
  CHECK_THROWS_AS(bruhat_leq(P("21"), P("321")), std::invalid_argument);
}

TEST_CASE("bruhat_interval") {
  const IntervalSummary top = bruhat_interval(P("321"));
  CHECK(top.size == 6);
  CHECK(top.poincare == Q({1, 2, 2, 1}));
  const IntervalSummary s312 = bruhat_interval(P("312"));
  CHECK(s312.size == 4);
  CHECK(s312.poincare == Q({1, 2, 1}));
  CHECK(bruhat_interval_members(P("312")) == std::vector<Permutation>{P("123"), P("132"), P("213"), P("312")});
  const IntervalSummary s = bruhat_interval(P("25134"));
  CHECK(s.size == 16);
  CHECK(s.poincare == Q({1, 4, 6, 4, 1}));
  CHECK_THROWS_AS(bruhat_interval(P("123456789")), std::invalid_argument);
}

TEST_CASE("BruhatTable matches the per-permutation filter") {
  for (int n = 1; n <= 5; ++n) {
    const BruhatTable table(n);
    std::size_t rank = 0;
    for (const Permutation& w : all_permutations(n)) {
      const IntervalSummary a = table.interval(rank++);
      const IntervalSummary b = bruhat_interval(w);
      REQUIRE(a.size == b.size);
      REQUIRE(a.poincare == b.poincare);
      REQUIRE(a.max_length == b.max_length);
    }
  }
}

TEST_CASE("product_q_formula") {
  CHECK(product_q_formula(Permutation::identity(4)) == QPolynomial::one());
  CHECK(product_q_formula(P("321")) == Q({1, 2, 2, 1}));
  CHECK(product_q_formula(P("312")) == Q({1, 1, 1}));
}

TEST_CASE("code_monotone_check") {
  for (const Permutation& w : all_permutations(4)) CHECK(code_monotone_check(Permutation::identity(4), w));
  CHECK(code_monotone_check(P("41325768"), P("41382657")));
  CHECK_FALSE(weak_leq(P("41325768"), P("41382657")));
  // c(21345) = (1,0,0,0,0) is below c(25134) = (1,3,0,0,0), yet 21345 is not
  // below 25134 in the weak order.
  CHECK(code_monotone_check(P("21345"), P("25134")));
  CHECK_FALSE(weak_leq(P("21345"), P("25134")));
}

TEST_CASE("witness_231_reduction") {
  const auto r = witness_231_reduction(P("41382657"));
  REQUIRE(r.has_value());
  CHECK(r->triple == std::array<int, 3>{1, 4, 5});
  CHECK(r->reduced == P("41325768"));
  CHECK(lehmer_code(r->reduced).entries == std::vector<int>{3, 0, 1, 0, 0, 1, 0, 0});

  const auto small = witness_231_reduction(P("231"));
  REQUIRE(small.has_value());
  CHECK(small->triple == std::array<int, 3>{1, 2, 3});
  CHECK(small->reduced == P("213"));

  CHECK_FALSE(witness_231_reduction(P("12345")).has_value());
}

TEST_CASE("weak order implies Bruhat order and code domination") {
  for (int n = 1; n <= 6; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& w : perms) {
      for (const Permutation& u : weak_interval_members(w)) {
        REQUIRE(bruhat_leq(u, w));
        REQUIRE(code_monotone_check(u, w));
      }
    }
  }
}

TEST_CASE("weak BFS equals the subset filter") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const IntervalSummary bfs = weak_interval(w);
      const auto filtered = oracle::weak_interval_by_filter(w);
      REQUIRE(bfs.size == filtered.size);
      REQUIRE(bfs.poincare == filtered.poincare);
    }
  }
}

TEST_CASE("dominance equals the transposition-chain definition") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& w : perms) {
      const auto down = oracle::bruhat_down_set_by_chains(w);
      for (const Permutation& u : perms) {
        REQUIRE(bruhat_leq(u, w) == std::binary_search(down.begin(), down.end(), u));
      }
    }
  }
  CHECK(oracle::bruhat_leq_by_chains(P("21345"), P("25134")));
}

TEST_CASE("q-product formula on 231-avoiders and the strict inequality otherwise") {
  const Pattern p231 = Pattern::parse("231");
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const IntervalSummary s = weak_interval(w);
      REQUIRE(s.poincare.degree() == inversion_count(w));
      REQUIRE(s.poincare[0] == 1);
      if (!contains_pattern(w, p231)) {
        REQUIRE(s.poincare == product_q_formula(w));
        REQUIRE_FALSE(witness_231_reduction(w).has_value());
      } else {
        REQUIRE(s.size < code_product(w));
        const auto r = witness_231_reduction(w);
        REQUIRE(r.has_value());
        REQUIRE(code_monotone_check(r->reduced, w));
        REQUIRE_FALSE(weak_leq(r->reduced, w));
        // Only entry j of the code drops.
        const LehmerCode before = lehmer_code(w);
        const LehmerCode after = lehmer_code(r->reduced);
        for (int i = 1; i <= n; ++i) REQUIRE((i == r->triple[1]) == (after[i] < before[i]));
      }
    }
  }
}
