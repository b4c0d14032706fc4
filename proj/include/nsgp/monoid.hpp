#pragma once

#include <vector>

#include "nsgp/checked.hpp"

namespace nsgp {

/// A numerical monoid: a co-finite additive submonoid of the nonnegative
/// integers, held by its minimal generating set n_1 < ... < n_p.
///
/// The constructor canonicalizes an arbitrary generating set (sorts, removes
/// duplicates and redundant generators).  The Apery set of the smallest
/// generator and the Frobenius number are computed eagerly, so instances are
/// immutable after construction and safe to share across threads.
class NumericalMonoid {
 public:
  explicit NumericalMonoid(std::vector<Int> raw_generators);

  const std::vector<Int>& generators() const { return gens_; }
  int embedding_dimension() const { return static_cast<int>(gens_.size()); }
  Int multiplicity() const { return gens_.front(); }
  Int largest_generator() const { return gens_.back(); }

  /// True when the monoid is all of N (generated by 1).  Invariant
  /// operations refuse such monoids.
  bool is_all_of_n() const { return gens_.front() == 1; }

  /// Membership test, defined for every integer.  O(1) via the cached Apery
  /// set of the multiplicity.
  bool contains(Int n) const {
    if (n < 0) return false;
    return n >= apery_mult_[n % gens_.front()];
  }

  /// The divisibility order of the monoid: a <= b iff b - a is a member.
  bool leq(Int a, Int b) const { return contains(checked_sub(b, a)); }

  /// Apery set of m: for each residue r mod m, the least member congruent to
  /// r.  Indexed by residue.  Requires m > 0 and m a member.
  std::vector<Int> apery(Int m) const;

  /// Largest integer outside the monoid.  Throws IsAllOfN when the monoid is
  /// all of N.
  Int frobenius() const;

 private:
  std::vector<Int> gens_;
  std::vector<Int> apery_mult_;  // Apery set of gens_[0], by residue
  Int frobenius_ = -1;           // meaningful only when !is_all_of_n()
};

/// Membership of n in the submonoid generated by `gens` (which need not have
/// gcd 1 and need not be minimal).  `gens` must be nonempty, sorted, positive.
bool submonoid_contains(const std::vector<Int>& gens, Int n);

/// Reusable membership tester for a fixed (possibly non-coprime) generator
/// list; amortizes the Apery table across queries.
class SubmonoidMembership {
 public:
  explicit SubmonoidMembership(const std::vector<Int>& gens);
  bool contains(Int n) const;

 private:
  Int content_;                // gcd of the generators
  std::vector<Int> table_;     // Apery table of the normalized list
  Int modulus_;                // smallest normalized generator
};

}  // namespace nsgp
