#pragma once

#include <vector>

#include "nsgp/factorization.hpp"
#include "nsgp/monoid.hpp"
#include "nsgp/rational.hpp"

namespace nsgp {

/// Parameters of a monoid generated by a generalized arithmetic sequence:
/// S = <a, ha+d, ..., ha+xd> with a >= 2, h, d, x >= 1 and gcd(a, d) = 1.
/// An input x >= a is clamped to a - 1 (for k >= a the element ha + kd is
/// already reachable from the earlier generators).
struct GasParams {
  Int a, h, d, x;

  GasParams(Int a_, Int h_, Int d_, Int x_);

  /// {a, ha+d, ..., ha+xd}; this list is already minimal.
  std::vector<Int> generators() const;
  NumericalMonoid to_monoid() const;

  /// floor((a-1)/x); named floor_p because the embedding dimension is a
  /// different quantity.
  Int floor_p() const { return (a - 1) / x; }
  Int rem_r() const { return (a - 1) % x; }
};

/// The unique representation n = q*a + i*d with 0 <= i <= a-1 (q may be
/// negative).
struct QaidRep {
  Int q, i;
};

QaidRep qaid_rep(const GasParams& P, Int n);

/// Membership: with (q, i) = qaid_rep(n), n is a member iff q >= 0 and
/// ceil(i/x) * h <= q.
bool gas_contains(const GasParams& P, Int n);

/// Membership from any representation n = q*a + i*d with q, i >= 0 (i may
/// exceed a): member iff ceil((i mod a)/x) * h <= q + floor(i/a) * d.
bool gas_contains_general(const GasParams& P, Int q, Int i);

/// Apery set of a: entry i is ceil(i/x)*h*a + i*d, for i = 0..a-1.  Indexed
/// by the d-multiplier i, not by residue; equal as a set to the monoid's
/// Apery set of a.
std::vector<Int> gas_apery(const GasParams& P);

/// max L(n) = q - ceil(i/x) * (h - 1).  Throws NotAMember for non-members.
Int gas_max_length(const GasParams& P, Int n);
/// Variant over a general representation (q, i >= 0).
Int gas_max_length_general(const GasParams& P, Int q, Int i);

/// Superset of the elements with more than one R-class:
/// {n_i + n_j : 1 <= i <= j <= x} together with
/// {floor_p * n_x + n_{r+1}, ..., (floor_p + 1) * n_x}.
std::vector<Int> gas_betti_candidates(const GasParams& P);

Int gas_min_multiple(const GasParams& P);  // ceil(a/x)*h + d
Int gas_catenary(const GasParams& P);      // ceil(a/x)*h + d
Int gas_tame(const GasParams& P);          // (ceil((a-1)/x) + 1)*h + d; also omega(S)
Int gas_frobenius(const GasParams& P);     // ceil((a-1)/x)*h*a + a*d - a - d

struct GasBounds {
  Rational upper;             // B = (g(S) + n_p) / n_1 + 1
  Rational upper_minus_tame;  // B - t(S) = (x-1)d/a
  Int tame_minus_catenary;    // (ceil((a-1)/x) + 1 - ceil(a/x)) * h
};

GasBounds gas_bounds(const GasParams& P);

struct GasH1 {
  Int catenary, tame;
};

/// The piecewise arithmetic-sequence values, defined for h = 1 only:
/// c = ceil(a/x) + d, and t = c when x divides a - 1, else c + 1.
GasH1 gas_h1_check(const GasParams& P);

struct GasTameWitness {
  Int element;          // n = t * a
  Factorization far;    // (t, 0, ..., 0)
  Int tame;             // t = gas_tame(P)
  Int oracle_distance;  // d(far, Z^1(n)) computed by enumeration
};

/// The element and factorization realizing the tame degree, with the
/// distance re-derived from the factorization oracle.
GasTameWitness gas_tame_witness(const GasParams& P);

}  // namespace nsgp
