#include "nsgp/monoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max();

// Least member of the monoid generated by `gens` in each residue class mod m,
// by round-robin relaxation: repeatedly try to improve dist[(v + g) mod m]
// from dist[v] + g until stable.  Requires gcd(gens) == 1 so every residue is
// eventually reached.
std::vector<Int> apery_table(const std::vector<Int>& gens, Int m) {
  std::vector<Int> dist(static_cast<std::size_t>(m), kInf);
  dist[0] = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Int r = 0; r < m; ++r) {
      if (dist[r] == kInf) continue;
      for (Int g : gens) {
        Int v = checked_add(dist[r], g);
        Int r2 = v % m;
        if (v < dist[r2]) {
          dist[r2] = v;
          changed = true;
        }
      }
    }
  }
  return dist;
}

}  // namespace

NumericalMonoid::NumericalMonoid(std::vector<Int> raw_generators) {
  if (raw_generators.empty()) throw EmptyInput("generator list is empty");
  for (Int g : raw_generators) {
    if (g < 1) throw Error("generators must be positive integers");
  }
  std::sort(raw_generators.begin(), raw_generators.end());
  raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                       raw_generators.end());
  Int content = 0;
  for (Int g : raw_generators) content = std::gcd(content, g);
  if (content != 1) {
    throw NonCoprime("gcd of generators is " + std::to_string(content) +
                     "; the complement would be infinite");
  }

  if (raw_generators.front() == 1) {
    gens_ = {1};  // S = N; kept representable, flagged via is_all_of_n()
  } else {
    // Ascending pass: a generator is redundant exactly when it is a sum of
    // smaller ones, so testing against the kept prefix is enough.
    for (Int g : raw_generators) {
      if (gens_.empty() || !submonoid_contains(gens_, g)) gens_.push_back(g);
    }
  }

  apery_mult_ = apery_table(gens_, gens_.front());
  if (!is_all_of_n()) {
    frobenius_ = checked_sub(*std::max_element(apery_mult_.begin(), apery_mult_.end()),
                             gens_.front());
  }
}

std::vector<Int> NumericalMonoid::apery(Int m) const {
  if (m <= 0 || !contains(m)) {
    throw NotAMember("Apery set requires a positive member, got " + std::to_string(m));
  }
  if (m == gens_.front()) return apery_mult_;
  return apery_table(gens_, m);
}

Int NumericalMonoid::frobenius() const {
  if (is_all_of_n()) {
    throw IsAllOfN("the monoid is all of N; it has no gap");
  }
  return frobenius_;
}

bool submonoid_contains(const std::vector<Int>& gens, Int n) {
  if (n == 0) return true;
  if (n < 0) return false;
  return SubmonoidMembership(gens).contains(n);
}

SubmonoidMembership::SubmonoidMembership(const std::vector<Int>& gens) {
  if (gens.empty()) throw EmptyInput("generator list is empty");
  content_ = 0;
  for (Int g : gens) content_ = std::gcd(content_, g);
  std::vector<Int> reduced;
  reduced.reserve(gens.size());
  for (Int g : gens) reduced.push_back(g / content_);
  modulus_ = *std::min_element(reduced.begin(), reduced.end());
  table_ = apery_table(reduced, modulus_);
}

bool SubmonoidMembership::contains(Int n) const {
  if (n == 0) return true;
  if (n < 0 || n % content_ != 0) return false;
  Int m = n / content_;
  return m >= table_[m % modulus_];
}

}  // namespace nsgp
