#include "nsgp/factorization.hpp"

#include <algorithm>
#include <numeric>

#include "nsgp/errors.hpp"

namespace nsgp {

Int Factorization::length() const {
  return std::accumulate(e.begin(), e.end(), Int{0});
}

std::vector<int> Factorization::support() const {
  std::vector<int> s;
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    if (e[i] != 0) s.push_back(i);
  }
  return s;
}

Int value_of(const NumericalMonoid& S, const Factorization& z) {
  const auto& g = S.generators();
  if (z.e.size() != g.size()) {
    throw DimensionMismatch("factorization has " + std::to_string(z.e.size()) +
                            " exponents for a monoid with " + std::to_string(g.size()) +
                            " generators");
  }
  Int v = 0;
  for (std::size_t i = 0; i < g.size(); ++i) v = checked_add(v, checked_mul(z.e[i], g[i]));
  return v;
}

Factorization gcd_fact(const Factorization& z, const Factorization& w) {
  if (z.e.size() != w.e.size()) {
    throw DimensionMismatch("factorizations of different dimension");
  }
  Factorization g;
  g.e.resize(z.e.size());
  for (std::size_t i = 0; i < z.e.size(); ++i) g.e[i] = std::min(z.e[i], w.e[i]);
  return g;
}

Int distance(const Factorization& z, const Factorization& w) {
  if (z.e.size() != w.e.size()) {
    throw DimensionMismatch("factorizations of different dimension");
  }
  Int lz = 0, lw = 0, lg = 0;
  for (std::size_t i = 0; i < z.e.size(); ++i) {
    lz += z.e[i];
    lw += w.e[i];
    lg += std::min(z.e[i], w.e[i]);
  }
  return std::max(lz, lw) - lg;
}

Int set_distance(const Factorization& z, const std::vector<Factorization>& ys) {
  if (ys.empty()) throw EmptySet("set distance against an empty set");
  Int best = distance(z, ys.front());
  for (std::size_t i = 1; i < ys.size(); ++i) best = std::min(best, distance(z, ys[i]));
  return best;
}

namespace {

// Shared enumerator.  Exponents are chosen from the largest generator down,
// each from its maximal feasible value to 0, so results come out descending
// in the last coordinate first.  Subtrees whose remainder is not a member
// cannot complete and are pruned.
void enumerate(const NumericalMonoid& S, Int n, std::size_t cap,
               std::vector<Factorization>& out, bool& truncated) {
  const auto& g = S.generators();
  const int p = static_cast<int>(g.size());
  if (n < 0 || !S.contains(n)) return;
  std::vector<Int> cur(static_cast<std::size_t>(p), 0);
  auto rec = [&](auto&& self, int idx, Int rem) -> bool {
    if (idx == 0) {
      if (rem % g[0] == 0) {
        if (out.size() >= cap) {
          truncated = true;
          return false;
        }
        cur[0] = rem / g[0];
        out.push_back(Factorization{cur});
      }
      return true;
    }
    if (!S.contains(rem)) return true;
    for (Int c = rem / g[idx]; c >= 0; --c) {
      cur[idx] = c;
      if (!self(self, idx - 1, rem - c * g[idx])) return false;
    }
    cur[idx] = 0;
    return true;
  };
  rec(rec, p - 1, n);
}

}  // namespace

std::vector<Factorization> factorizations(const NumericalMonoid& S, Int n) {
  std::vector<Factorization> out;
  bool truncated = false;
  enumerate(S, n, static_cast<std::size_t>(-1), out, truncated);
  return out;
}

CappedFactorizations factorizations_capped(const NumericalMonoid& S, Int n, std::size_t cap) {
  CappedFactorizations r;
  enumerate(S, n, cap, r.items, r.truncated);
  return r;
}

Int factorization_count(const NumericalMonoid& S, Int n) {
  if (n < 0) return 0;
  std::vector<Int> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (Int g : S.generators()) {
    for (Int m = g; m <= n; ++m) ways[m] = checked_add(ways[m], ways[m - g]);
  }
  return ways[n];
}

LengthSet length_set(const NumericalMonoid& S, Int n) {
  if (!S.contains(n)) {
    throw NotAMember(std::to_string(n) + " is not a member");
  }
  LengthSet ls;
  ls.element = n;
  for (const auto& z : factorizations(S, n)) ls.lengths.push_back(z.length());
  std::sort(ls.lengths.begin(), ls.lengths.end());
  ls.lengths.erase(std::unique(ls.lengths.begin(), ls.lengths.end()), ls.lengths.end());
  return ls;
}

Int max_length(const NumericalMonoid& S, Int n) { return length_set(S, n).lengths.back(); }

Int min_length(const NumericalMonoid& S, Int n) { return length_set(S, n).lengths.front(); }

std::vector<Int> delta_set(const NumericalMonoid& S, Int n) {
  LengthSet ls = length_set(S, n);
  std::vector<Int> deltas;
  for (std::size_t i = 1; i < ls.lengths.size(); ++i) {
    deltas.push_back(ls.lengths[i] - ls.lengths[i - 1]);
  }
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  return deltas;
}

Rational elasticity_of_element(const NumericalMonoid& S, Int n) {
  LengthSet ls = length_set(S, n);
  if (ls.lengths.front() == 0) return Rational(1);  // n = 0
  return Rational(ls.lengths.back(), ls.lengths.front());
}

namespace {

std::vector<Int> length_table(const NumericalMonoid& S, Int bound, bool want_max) {
  const auto& g = S.generators();
  std::vector<Int> t(static_cast<std::size_t>(bound) + 1, -1);
  t[0] = 0;
  for (Int n = 1; n <= bound; ++n) {
    if (!S.contains(n)) continue;
    Int best = -1;
    for (Int gi : g) {
      if (gi > n) break;
      Int prev = t[n - gi];
      if (prev < 0) continue;
      Int cand = prev + 1;
      if (best < 0 || (want_max ? cand > best : cand < best)) best = cand;
    }
    t[n] = best;
  }
  return t;
}

}  // namespace

std::vector<Int> max_length_table(const NumericalMonoid& S, Int bound) {
  return length_table(S, bound, true);
}

std::vector<Int> min_length_table(const NumericalMonoid& S, Int bound) {
  return length_table(S, bound, false);
}

}  // namespace nsgp
