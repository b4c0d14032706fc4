#include "nsgp/gas.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

// Inverse of d modulo a (extended Euclid); gcd(a, d) == 1 is a type invariant.
Int mod_inverse(Int d, Int a) {
  Int old_r = mod_floor(d, a), r = a;
  Int old_s = 1, s = 0;
  while (r != 0) {
    Int q = old_r / r;
    Int next_r = old_r - q * r;
    old_r = r;
    r = next_r;
    Int next_s = old_s - q * s;
    old_s = s;
    s = next_s;
  }
  return mod_floor(old_s, a);
}

}  // namespace

GasParams::GasParams(Int a_, Int h_, Int d_, Int x_) : a(a_), h(h_), d(d_), x(x_) {
  if (a < 2) throw ConfigInvalid("a must be at least 2");
  if (h < 1 || d < 1 || x < 1) throw ConfigInvalid("h, d, x must be positive");
  if (std::gcd(a, d) != 1) {
    throw NonCoprime("gcd(a, d) = " + std::to_string(std::gcd(a, d)) + ", need 1");
  }
  if (x >= a) x = a - 1;
}

std::vector<Int> GasParams::generators() const {
  std::vector<Int> g;
  g.reserve(static_cast<std::size_t>(x) + 1);
  g.push_back(a);
  Int base = checked_mul(h, a);
  for (Int k = 1; k <= x; ++k) g.push_back(checked_add(base, checked_mul(k, d)));
  return g;
}

NumericalMonoid GasParams::to_monoid() const { return NumericalMonoid(generators()); }

QaidRep qaid_rep(const GasParams& P, Int n) {
  Int inv = mod_inverse(P.d, P.a);
  Int i = mod_floor(checked_mul(mod_floor(n, P.a), inv), P.a);
  Int q = (checked_sub(n, checked_mul(i, P.d))) / P.a;  // exact by construction
  return {q, i};
}

bool gas_contains(const GasParams& P, Int n) {
  auto [q, i] = qaid_rep(P, n);
  return q >= 0 && ceil_div(i, P.x) * P.h <= q;
}

bool gas_contains_general(const GasParams& P, Int q, Int i) {
  if (q < 0 || i < 0) throw Error("gas_contains_general requires q, i >= 0");
  return checked_mul(ceil_div(i % P.a, P.x), P.h) <= checked_add(q, checked_mul(i / P.a, P.d));
}

std::vector<Int> gas_apery(const GasParams& P) {
  std::vector<Int> ap;
  ap.reserve(static_cast<std::size_t>(P.a));
  for (Int i = 0; i < P.a; ++i) {
    ap.push_back(checked_add(checked_mul(checked_mul(ceil_div(i, P.x), P.h), P.a),
                             checked_mul(i, P.d)));
  }
  return ap;
}

Int gas_max_length(const GasParams& P, Int n) {
  if (!gas_contains(P, n)) throw NotAMember(std::to_string(n) + " is not a member");
  auto [q, i] = qaid_rep(P, n);
  return q - ceil_div(i, P.x) * (P.h - 1);
}

Int gas_max_length_general(const GasParams& P, Int q, Int i) {
  if (!gas_contains_general(P, q, i)) {
    throw NotAMember("q*a + i*d is not a member");
  }
  return checked_add(q, checked_mul(i / P.a, P.d)) - ceil_div(i % P.a, P.x) * (P.h - 1);
}

std::vector<Int> gas_betti_candidates(const GasParams& P) {
  std::vector<Int> gen = P.generators();  // gen[0] = a, gen[k] = ha + kd
  std::set<Int> cand;
  for (Int i = 1; i <= P.x; ++i) {
    for (Int j = i; j <= P.x; ++j) cand.insert(checked_add(gen[i], gen[j]));
  }
  Int fp = P.floor_p();
  Int r = P.rem_r();
  for (Int k = r + 1; k <= P.x; ++k) {
    cand.insert(checked_add(checked_mul(fp, gen[P.x]), gen[k]));
  }
  return std::vector<Int>(cand.begin(), cand.end());
}

Int gas_min_multiple(const GasParams& P) {
  return checked_add(checked_mul(ceil_div(P.a, P.x), P.h), P.d);
}

Int gas_catenary(const GasParams& P) { return gas_min_multiple(P); }

Int gas_tame(const GasParams& P) {
  return checked_add(checked_mul(ceil_div(P.a - 1, P.x) + 1, P.h), P.d);
}

Int gas_frobenius(const GasParams& P) {
  Int t = checked_mul(checked_mul(ceil_div(P.a - 1, P.x), P.h), P.a);
  return checked_sub(checked_add(t, checked_mul(P.a, P.d)), checked_add(P.a, P.d));
}

GasBounds gas_bounds(const GasParams& P) {
  Int lead = checked_mul(ceil_div(P.a - 1, P.x) + 1, P.h);
  Rational tail(checked_mul(P.x - 1, P.d), P.a);
  GasBounds b;
  b.upper = Rational(lead) + tail;
  b.upper_minus_tame = tail;
  b.tame_minus_catenary = checked_mul(ceil_div(P.a - 1, P.x) + 1 - ceil_div(P.a, P.x), P.h);
  return b;
}

GasH1 gas_h1_check(const GasParams& P) {
  if (P.h != 1) throw HNotOne("defined for h = 1 only");
  Int c = checked_add(ceil_div(P.a, P.x), P.d);
  // "a mod x = 1" in the sense of x | a - 1; for x = 1 the two branch values
  // coincide with the ceiling identity only on this branch.
  Int t = ((P.a - 1) % P.x == 0) ? c : c + 1;
  return {c, t};
}

GasTameWitness gas_tame_witness(const GasParams& P) {
  GasTameWitness w;
  w.tame = gas_tame(P);
  w.element = checked_mul(w.tame, P.a);
  NumericalMonoid S = P.to_monoid();
  w.far.e.assign(S.generators().size(), 0);
  w.far.e[0] = w.tame;
  std::vector<Factorization> with_second;  // Z^1(n): factorizations using ha+d
  for (auto& z : factorizations(S, w.element)) {
    if (z.e[1] > 0) with_second.push_back(std::move(z));
  }
  w.oracle_distance = set_distance(w.far, with_second);
  return w;
}

}  // namespace nsgp
