#pragma once

#include <cstddef>
#include <vector>

#include "nsgp/monoid.hpp"
#include "nsgp/rational.hpp"

namespace nsgp {

/// An exponent vector over the minimal generators of a monoid: the
/// factorization z = (z_1, ..., z_p) of the element sum z_i * n_i.
struct Factorization {
  std::vector<Int> e;

  Int length() const;
  std::vector<int> support() const;

  bool operator==(const Factorization&) const = default;
};

/// The element a factorization evaluates to under the monoid's generators.
Int value_of(const NumericalMonoid& S, const Factorization& z);

/// Componentwise minimum.  Throws DimensionMismatch on unequal lengths.
Factorization gcd_fact(const Factorization& z, const Factorization& w);

/// d(z, w) = max(|z - g|, |w - g|) with g = gcd_fact(z, w).
Int distance(const Factorization& z, const Factorization& w);

/// min over y in `ys` of distance(z, y).  Throws EmptySet when ys is empty.
Int set_distance(const Factorization& z, const std::vector<Factorization>& ys);

/// Every factorization of n, in a fixed deterministic order: descending in
/// the last exponent first.  Empty iff n is not a member.
std::vector<Factorization> factorizations(const NumericalMonoid& S, Int n);

struct CappedFactorizations {
  std::vector<Factorization> items;
  bool truncated = false;
};

/// Like factorizations() but stops after `cap` results.
CappedFactorizations factorizations_capped(const NumericalMonoid& S, Int n, std::size_t cap);

/// Number of factorizations of n (the denumerant), by a table recurrence
/// independent of the enumeration above.
Int factorization_count(const NumericalMonoid& S, Int n);

struct LengthSet {
  Int element = 0;
  std::vector<Int> lengths;  // sorted ascending, duplicate-free
};

/// L(n), the set of factorization lengths.  Throws NotAMember if n is not in
/// the monoid.
LengthSet length_set(const NumericalMonoid& S, Int n);
Int max_length(const NumericalMonoid& S, Int n);
Int min_length(const NumericalMonoid& S, Int n);

/// Successive differences of the sorted length set (empty when all
/// factorizations of n have one length).
std::vector<Int> delta_set(const NumericalMonoid& S, Int n);

/// max L(n) / min L(n) as an exact rational; 1 for n = 0.
Rational elasticity_of_element(const NumericalMonoid& S, Int n);

/// Dynamic-programming length tables over [0, bound]; entry -1 marks a
/// non-member.  Used by the invariant scans; unit tests pin them against the
/// enumeration-based lengths.
std::vector<Int> max_length_table(const NumericalMonoid& S, Int bound);
std::vector<Int> min_length_table(const NumericalMonoid& S, Int bound);

}  // namespace nsgp
