#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "nsgp/gas.hpp"
#include "nsgp/invariants.hpp"

using nsgp::GasParams;
using nsgp::Int;
using nsgp::NumericalMonoid;
using nsgp::Rational;

TEST_CASE("parameter validation and normalization") {
  CHECK_THROWS_AS(GasParams(1, 1, 1, 1), nsgp::ConfigInvalid);
  CHECK_THROWS_AS(GasParams(4, 1, 2, 1), nsgp::NonCoprime);
  CHECK_THROWS_AS(GasParams(5, 0, 1, 1), nsgp::ConfigInvalid);
  CHECK(GasParams(5, 2, 3, 9).x == 4);  // clamped to a - 1
  CHECK(GasParams(5, 2, 3, 9).generators() == std::vector<Int>{5, 13, 16, 19, 22});
}

TEST_CASE("generalized arithmetic monoids") {
  CHECK(GasParams(5, 2, 3, 2).generators() == std::vector<Int>{5, 13, 16});
  CHECK(GasParams(8, 2, 3, 3).generators() == std::vector<Int>{8, 19, 22, 25});
  CHECK(GasParams(2, 1, 1, 1).generators() == std::vector<Int>{2, 3});
}

TEST_CASE("the generator list survives canonicalization") {
  for (auto [a, h, d, x] : {std::array<Int, 4>{5, 2, 3, 2},
                            {8, 2, 3, 3},
                            {2, 1, 1, 1},
                            {5, 2, 3, 9},
                            {12, 4, 7, 11},
                            {7, 1, 6, 6}}) {
    GasParams P(a, h, d, x);
    CHECK(P.to_monoid().generators() == P.generators());
  }
}

TEST_CASE("q-a-i-d representation") {
  GasParams P(5, 2, 3, 2);
  auto r28 = qaid_rep(P, 28);
  CHECK(r28.q == 5);
  CHECK(r28.i == 1);
  auto r0 = qaid_rep(P, 0);
  CHECK(r0.q == 0);
  CHECK(r0.i == 0);
  auto r26 = qaid_rep(P, 26);
  CHECK(r26.q == 4);
  CHECK(r26.i == 2);
  // q may be negative; the representation must still reconstruct n.
  for (Int n = -30; n <= 120; ++n) {
    auto r = qaid_rep(P, n);
    CHECK(0 <= r.i);
    CHECK(r.i < P.a);
    CHECK(r.q * P.a + r.i * P.d == n);
  }
}

TEST_CASE("membership criterion") {
  GasParams P(5, 2, 3, 2);
  CHECK(gas_contains(P, 28));
  CHECK(!gas_contains(P, 27));  // the Frobenius number
  CHECK(gas_contains(P, 0));
  CHECK(!gas_contains(P, -5));
}

TEST_CASE("membership from a general representation") {
  GasParams P(5, 2, 3, 2);
  CHECK(gas_contains_general(P, 2, 7));  // n = 31
  CHECK(gas_contains_general(P, 0, 0));
  CHECK(!gas_contains_general(P, 1, 1));  // n = 8
  CHECK_THROWS_AS(gas_contains_general(P, -1, 2), nsgp::Error);

  // Any nonnegative split n = q*a + i*d must agree with the canonical one.
  for (Int q = 0; q <= 12; ++q) {
    for (Int i = 0; i <= 12; ++i) {
      Int n = q * P.a + i * P.d;
      CAPTURE(q);
      CAPTURE(i);
      CHECK(gas_contains_general(P, q, i) == gas_contains(P, n));
    }
  }
}

TEST_CASE("closed-form Apery sets") {
  CHECK(gas_apery(GasParams(5, 2, 3, 2)) == std::vector<Int>{0, 13, 16, 29, 32});
  CHECK(gas_apery(GasParams(2, 1, 1, 1)) == std::vector<Int>{0, 3});
  // ceil(i/3)*16 + 3i for i = 0..7.
  CHECK(gas_apery(GasParams(8, 2, 3, 3)) ==
        std::vector<Int>{0, 19, 22, 25, 44, 47, 50, 69});

  for (auto [a, h, d, x] : {std::array<Int, 4>{5, 2, 3, 2}, {8, 2, 3, 3}, {7, 3, 2, 4}}) {
    GasParams P(a, h, d, x);
    auto formula = gas_apery(P);
    auto oracle = P.to_monoid().apery(P.a);
    std::sort(formula.begin(), formula.end());
    std::sort(oracle.begin(), oracle.end());
    CHECK(formula == oracle);
  }
}

TEST_CASE("closed-form maximal lengths") {
  GasParams P(5, 2, 3, 2);
  CHECK(gas_max_length(P, 26) == 3);
  CHECK(gas_max_length(P, 0) == 0);
  CHECK(gas_max_length(P, 45) == 9);
  CHECK_THROWS_AS(gas_max_length(P, 27), nsgp::NotAMember);

  NumericalMonoid S = P.to_monoid();
  for (Int n = 0; n <= 100; ++n) {
    if (!gas_contains(P, n)) continue;
    CHECK(gas_max_length(P, n) == max_length(S, n));
    auto [q, i] = qaid_rep(P, n);
    CHECK(gas_max_length_general(P, q, i) == gas_max_length(P, n));
    if (q >= P.d) {
      CHECK(gas_max_length_general(P, q - P.d, i + P.a) == gas_max_length(P, n));
    }
  }
}

TEST_CASE("Betti candidate superset") {
  CHECK(gas_betti_candidates(GasParams(5, 2, 3, 2)) ==
        std::vector<Int>{26, 29, 32, 45, 48});
  CHECK(gas_betti_candidates(GasParams(2, 1, 1, 1)) == std::vector<Int>{6});

  for (auto [a, h, d, x] : {std::array<Int, 4>{5, 2, 3, 2}, {8, 2, 3, 3}, {6, 1, 5, 4}}) {
    GasParams P(a, h, d, x);
    auto cand = gas_betti_candidates(P);
    std::set<Int> cand_set(cand.begin(), cand.end());
    for (Int n : betti_elements(P.to_monoid())) {
      CAPTURE(n);
      CHECK(cand_set.count(n) == 1);
    }
  }
}

TEST_CASE("closed-form invariants of the running examples") {
  GasParams P(5, 2, 3, 2);
  CHECK(gas_min_multiple(P) == 9);
  CHECK(gas_catenary(P) == 9);
  CHECK(gas_tame(P) == 9);
  CHECK(gas_frobenius(P) == 27);

  GasParams Q(8, 2, 3, 3);
  CHECK(gas_min_multiple(Q) == 9);
  CHECK(gas_catenary(Q) == 9);
  CHECK(gas_tame(Q) == 11);
  CHECK(gas_frobenius(Q) == 61);

  GasParams R(2, 1, 1, 1);
  CHECK(gas_min_multiple(R) == 3);
  CHECK(gas_catenary(R) == 3);
  CHECK(gas_tame(R) == 3);
  CHECK(gas_frobenius(R) == 1);
}

TEST_CASE("the minimal-multiple value always equals the catenary value") {
  for (Int a = 2; a <= 9; ++a) {
    for (Int d = 1; d <= 5; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (Int h = 1; h <= 3; ++h) {
        for (Int x = 1; x < a; ++x) {
          GasParams P(a, h, d, x);
          CHECK(gas_min_multiple(P) == gas_catenary(P));
        }
      }
    }
  }
}

TEST_CASE("bound chain") {
  auto B = gas_bounds(GasParams(8, 2, 3, 3));
  CHECK(B.tame_minus_catenary == 2);
  CHECK(B.upper_minus_tame == Rational(3, 4));
  CHECK(B.upper == Rational(35, 4));

  auto C = gas_bounds(GasParams(5, 2, 3, 2));
  CHECK(C.tame_minus_catenary == 0);  // ceil(4/2)+1 == ceil(5/2)
  CHECK(C.upper_minus_tame == Rational(3, 5));

  auto D = gas_bounds(GasParams(7, 3, 2, 1));
  CHECK(D.upper_minus_tame == Rational(0));
  CHECK(D.upper == Rational(gas_tame(GasParams(7, 3, 2, 1))));

  for (auto [a, h, d, x] : {std::array<Int, 4>{5, 2, 3, 2}, {8, 2, 3, 3}, {9, 4, 5, 7}}) {
    GasParams P(a, h, d, x);
    auto b = gas_bounds(P);
    CHECK(b.upper - Rational(gas_tame(P)) == b.upper_minus_tame);
    CHECK(gas_tame(P) - gas_catenary(P) == b.tame_minus_catenary);
    CHECK(Rational(gas_catenary(P)) <= Rational(gas_tame(P)));
    CHECK(Rational(gas_tame(P)) <= b.upper);
  }
}

TEST_CASE("arithmetic-sequence specialization (h = 1)") {
  auto v = gas_h1_check(GasParams(5, 1, 3, 2));
  CHECK(v.catenary == 6);
  CHECK(v.tame == 6);  // 5 = 2*2 + 1: x divides a - 1

  auto w = gas_h1_check(GasParams(8, 1, 3, 3));
  CHECK(w.catenary == 6);
  CHECK(w.tame == 7);

  auto u = gas_h1_check(GasParams(2, 1, 1, 1));
  CHECK(u.catenary == 3);
  CHECK(u.tame == 3);

  CHECK_THROWS_AS(gas_h1_check(GasParams(5, 2, 3, 2)), nsgp::HNotOne);

  for (Int a = 2; a <= 9; ++a) {
    for (Int d = 1; d <= 5; ++d) {
      if (std::gcd(a, d) != 1) continue;
      for (Int x = 1; x < a; ++x) {
        GasParams P(a, 1, d, x);
        auto piecewise = gas_h1_check(P);
        CHECK(piecewise.catenary == gas_catenary(P));
        CHECK(piecewise.tame == gas_tame(P));
      }
    }
  }
}

TEST_CASE("tame witness element") {
  auto w = gas_tame_witness(GasParams(5, 2, 3, 2));
  CHECK(w.element == 45);
  CHECK(w.far.e == std::vector<Int>{9, 0, 0});
  CHECK(w.tame == 9);
  CHECK(w.oracle_distance == 9);

  auto v = gas_tame_witness(GasParams(8, 2, 3, 3));
  CHECK(v.element == 88);
  CHECK(v.far.e == std::vector<Int>{11, 0, 0, 0});
  CHECK(v.oracle_distance == 11);

  auto u = gas_tame_witness(GasParams(2, 1, 1, 1));
  CHECK(u.element == 6);
  CHECK(u.far.e == std::vector<Int>{3, 0});
  CHECK(u.oracle_distance == 3);
}

TEST_CASE("growth of the tame-catenary gap in h") {
  for (Int h = 1; h <= 5; ++h) {
    GasParams P(8, h, 3, 3);
    NumericalMonoid S = P.to_monoid();
    CHECK(tame_degree(S) - catenary_degree(S) == h);
  }
}
