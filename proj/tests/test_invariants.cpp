#include <doctest.h>

#include <algorithm>
#include <set>

#include "nsgp/invariants.hpp"
#include "oracles.hpp"

using nsgp::Factorization;
using nsgp::Int;
using nsgp::NumericalMonoid;

namespace {

std::set<std::vector<Int>> class_as_set(const std::vector<Factorization>& c) {
  std::set<std::vector<Int>> s;
  for (const auto& z : c) s.insert(z.e);
  return s;
}

const std::vector<std::vector<Int>> kCorpus = {
    {2, 3}, {5, 13, 16}, {5, 6, 7, 9}, {6, 9, 11}, {8, 19, 22, 25}};

}  // namespace

TEST_CASE("element graph of the worked example") {
  NumericalMonoid S({5, 6, 7, 9});
  auto g = element_graph(S, 18);
  CHECK(g.vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(g.component_count == 2);  // triangle {5,6,7} plus isolated 9
}

TEST_CASE("element graph edge cases") {
  NumericalMonoid S({5, 13, 16});
  for (int i = 0; i < S.embedding_dimension(); ++i) {
    auto g = element_graph(S, S.generators()[i]);
    CHECK(g.vertices == std::vector<int>{i});
    CHECK(g.edges.empty());
    CHECK(g.component_count == 1);
  }
  auto g45 = element_graph(S, 45);
  CHECK(g45.vertices == std::vector<int>{0, 1, 2});
  CHECK(g45.edges == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(g45.component_count == 2);
  CHECK_THROWS_AS(element_graph(S, 8), nsgp::NotAMember);
}

TEST_CASE("R-classes of the worked example") {
  NumericalMonoid S({5, 6, 7, 9});
  auto part = r_classes(S, 18);
  REQUIRE(part.classes.size() == 2);
  std::set<std::set<std::vector<Int>>> got{class_as_set(part.classes[0]),
                                           class_as_set(part.classes[1])};
  std::set<std::set<std::vector<Int>>> want{{{1, 1, 1, 0}}, {{0, 0, 0, 2}}};
  CHECK(got == want);
}

TEST_CASE("R-classes edge cases") {
  NumericalMonoid S({5, 13, 16});
  auto zero = r_classes(S, 0);
  REQUIRE(zero.classes.size() == 1);
  CHECK(zero.class_min_lengths == std::vector<Int>{0});

  auto part = r_classes(S, 45);
  REQUIRE(part.classes.size() == 2);
  std::multiset<Int> r(part.class_min_lengths.begin(), part.class_min_lengths.end());
  CHECK(r == std::multiset<Int>{3, 9});
  CHECK(part.mu() == 9);

  CHECK_THROWS_AS(r_classes(S, 8), nsgp::NotAMember);
}

TEST_CASE("R-class count equals element-graph component count") {
  for (const auto& gens : kCorpus) {
    NumericalMonoid S(gens);
    Int bound = betti_scan_bound(S);
    for (Int n = 1; n <= bound; ++n) {
      if (!S.contains(n)) continue;
      CAPTURE(n);
      CHECK(static_cast<int>(r_classes(S, n).classes.size()) ==
            element_graph(S, n).component_count);
    }
  }
}

TEST_CASE("catenary degree of an element") {
  NumericalMonoid S({5, 13, 16});
  CHECK(catenary_of_element(S, 45) == 9);
  CHECK(catenary_of_element(S, 5) == 0);  // atoms factor uniquely

  NumericalMonoid T({5, 6, 7, 9});
  CHECK(catenary_of_element(T, 18) == 3);

  NumericalMonoid U({2, 3});
  CHECK(catenary_of_element(U, 12) == 3);  // {(6,0),(3,2),(0,4)} chains in steps of 3
}

TEST_CASE("Betti elements") {
  NumericalMonoid S({5, 13, 16});
  CHECK(betti_elements(S) == std::vector<Int>{26, 45, 48});

  NumericalMonoid U({2, 3});
  CHECK(betti_elements(U) == std::vector<Int>{6});

  NumericalMonoid V({6, 9, 11});
  auto betti = betti_elements(V);
  CHECK(betti == std::vector<Int>{18, 33});
  bool has_maximizer = false;
  for (Int n : betti) has_maximizer |= (r_classes(V, n).mu() == 4);
  CHECK(has_maximizer);

  CHECK_THROWS_AS(betti_elements(NumericalMonoid({1})), nsgp::IsAllOfN);
}

TEST_CASE("no Betti element above the scan bound") {
  for (const auto& gens : kCorpus) {
    NumericalMonoid S(gens);
    Int bound = betti_scan_bound(S);
    nsgp_test::Rng rng(0xb0b0f00dULL);
    for (int trial = 0; trial < 50; ++trial) {
      Int n = bound + 1 + rng.below(2 * S.largest_generator());
      if (!S.contains(n)) continue;
      CAPTURE(n);
      CHECK(r_classes(S, n).classes.size() == 1);
    }
  }
}

TEST_CASE("catenary degree") {
  CHECK(catenary_degree(NumericalMonoid({6, 9, 11})) == 4);
  CHECK(catenary_degree(NumericalMonoid({5, 13, 16})) == 9);
  CHECK(catenary_degree(NumericalMonoid({2, 3})) == 3);
  CHECK_THROWS_AS(catenary_degree(NumericalMonoid({1})), nsgp::IsAllOfN);
}

TEST_CASE("catenary degree agrees with the bottleneck computation") {
  for (const auto& gens : kCorpus) {
    NumericalMonoid S(gens);
    Int via_mu = catenary_degree(S);
    Int via_bottleneck = 0;
    for (Int n : betti_elements(S)) {
      via_bottleneck = std::max(via_bottleneck, catenary_of_element(S, n));
    }
    CHECK(via_mu == via_bottleneck);
  }
}

TEST_CASE("least multiple of the smallest generator inside the rest") {
  CHECK(min_multiple_in_rest(NumericalMonoid({6, 9, 11})) == 3);
  CHECK(min_multiple_in_rest(NumericalMonoid({5, 13, 16})) == 9);
  CHECK(min_multiple_in_rest(NumericalMonoid({2, 3})) == 3);
  CHECK_THROWS_AS(min_multiple_in_rest(NumericalMonoid({1})), nsgp::TooFewGenerators);
}

TEST_CASE("the catenary degree dominates the minimal multiple") {
  for (const auto& gens : kCorpus) {
    NumericalMonoid S(gens);
    CHECK(min_multiple_in_rest(S) <= catenary_degree(S));
  }
}

TEST_CASE("tame degree of an element") {
  NumericalMonoid S({5, 13, 16});
  CHECK(tame_of_element_i(S, 45, 1) == 9);  // generator 13; Z^i(45) = {(0,1,2)}
  CHECK(tame_of_element_i(S, 13, 1) == 0);  // atoms factor uniquely
  CHECK(tame_of_element(S, 45) == 9);

  NumericalMonoid T({5, 6, 7, 9});
  CHECK(tame_of_element_i(T, 18, 3) == 3);  // d((1,1,1,0), {(0,0,0,2)})
  CHECK(tame_of_element(T, 18) == 3);
  CHECK(tame_of_element(T, 0) == 0);

  CHECK_THROWS_AS(tame_of_element_i(S, 13, 0), nsgp::AtomNotBelow);  // 13 - 5 = 8
  CHECK_THROWS_AS(tame_of_element_i(S, 8, 0), nsgp::NotAMember);
  CHECK_THROWS_AS(tame_of_element_i(S, 45, 7), nsgp::NotAnAtom);
}

TEST_CASE("tame degree") {
  CHECK(tame_degree(NumericalMonoid({5, 13, 16})) == 9);
  CHECK(tame_degree(NumericalMonoid({8, 19, 22, 25})) == 11);
  CHECK(tame_degree(NumericalMonoid({2, 3})) == 3);
  CHECK_THROWS_AS(tame_degree(NumericalMonoid({1})), nsgp::IsAllOfN);
}

TEST_CASE("per-element chain c(n) <= t(n) <= max L(n)") {
  for (const auto& gens : kCorpus) {
    NumericalMonoid S(gens);
    Int bound = betti_scan_bound(S);
    for (Int n = 1; n <= bound; ++n) {
      if (!S.contains(n)) continue;
      Int c = catenary_of_element(S, n);
      Int t = tame_of_element(S, n);
      CAPTURE(n);
      CHECK(c <= t);
      CHECK(t <= max_length(S, n));
    }
  }
}

TEST_CASE("omega") {
  NumericalMonoid S({5, 13, 16});
  CHECK(omega(S) == 9);
  CHECK(omega_of_atom(S, 13) == 9);  // witnessed by (9,0,0) at 45

  NumericalMonoid U({2, 3});
  CHECK(omega_of_atom(U, 3) == 3);  // (3,0) at 6 is minimal: 3 does not divide 4
  CHECK(omega_of_atom(U, 2) == 2);
  CHECK(omega(U) == 3);

  CHECK_THROWS_AS(omega_of_atom(S, 4), nsgp::NotAnAtom);
  CHECK_THROWS_AS(omega(NumericalMonoid({1})), nsgp::IsAllOfN);
}

TEST_CASE("tau") {
  NumericalMonoid U({2, 3});
  CHECK(tau_of_atom(U, 2) == 2);
  CHECK(tau_of_atom(U, 3) == 1);
  CHECK(1 + tau_of_atom(U, 2) <= tame_degree(U));
  CHECK_THROWS_AS(tau_of_atom(U, 5), nsgp::NotAnAtom);
}

TEST_CASE("tame components decompose through omega and tau") {
  for (const auto& gens : kCorpus) {
    NumericalMonoid S(gens);
    for (int i = 0; i < S.embedding_dimension(); ++i) {
      Int b = S.generators()[i];
      Int lhs = tame_degree_of_atom(S, i);
      Int rhs = std::max(omega_of_atom(S, b), 1 + tau_of_atom(S, b));
      CAPTURE(b);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("tame degree is the maximum of its per-atom components") {
  for (const auto& gens : kCorpus) {
    NumericalMonoid S(gens);
    Int best = 0;
    for (int i = 0; i < S.embedding_dimension(); ++i) {
      best = std::max(best, tame_degree_of_atom(S, i));
    }
    CHECK(best == tame_degree(S));
  }
}

TEST_CASE("omega and tau scans terminate at the stated bound") {
  // Minimal factorizations have value at most b + frobenius + n_p: scanning a
  // window above that bound finds nothing new.
  for (const auto& gens : {std::vector<Int>{2, 3}, {5, 13, 16}, {6, 9, 11}}) {
    NumericalMonoid S(gens);
    Int frob = S.frobenius();
    Int np = S.largest_generator();
    for (Int b : S.generators()) {
      Int bound = b + frob + np;
      for (Int s = bound + 1; s <= bound + 2 * np; ++s) {
        if (!S.contains(s) || !S.contains(s - b)) continue;
        for (const auto& z : factorizations(S, s)) {
          bool minimal = true;
          for (int k = 0; k < S.embedding_dimension(); ++k) {
            if (z.e[k] > 0 && S.contains(s - S.generators()[k] - b)) {
              minimal = false;
              break;
            }
          }
          CAPTURE(s);
          CHECK(!minimal);
        }
      }
    }
  }
}

TEST_CASE("expired deadlines abort long scans") {
  NumericalMonoid S({8, 19, 22, 25});
  nsgp::Deadline expired = nsgp::Deadline::after(std::chrono::milliseconds(0));
  CHECK_THROWS_AS(tame_degree(S, expired), nsgp::Timeout);
  CHECK_THROWS_AS(omega(S, expired), nsgp::Timeout);
  CHECK_THROWS_AS(betti_elements(S, expired), nsgp::Timeout);
}
