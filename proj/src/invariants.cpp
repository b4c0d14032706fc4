#include "nsgp/invariants.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "nsgp/errors.hpp"

namespace nsgp {

namespace {

constexpr Int kInf = std::numeric_limits<Int>::max();

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_member(const NumericalMonoid& S, Int n) {
  if (!S.contains(n)) throw NotAMember(std::to_string(n) + " is not a member");
}

void require_invariants_defined(const NumericalMonoid& S) {
  if (S.is_all_of_n()) {
    throw IsAllOfN("the monoid is all of N; factorization invariants are undefined");
  }
}

int atom_index_of(const NumericalMonoid& S, Int atom) {
  const auto& g = S.generators();
  auto it = std::lower_bound(g.begin(), g.end(), atom);
  if (it == g.end() || *it != atom) {
    throw NotAnAtom(std::to_string(atom) + " is not a minimal generator");
  }
  return static_cast<int>(it - g.begin());
}

// Component count of the element graph without materializing it.
int graph_component_count(const NumericalMonoid& S, Int n) {
  const auto& g = S.generators();
  const int p = static_cast<int>(g.size());
  std::vector<int> verts;
  for (int i = 0; i < p; ++i) {
    if (S.contains(n - g[i])) verts.push_back(i);
  }
  Dsu dsu(p);
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      if (S.contains(n - g[verts[a]] - g[verts[b]])) dsu.unite(verts[a], verts[b]);
    }
  }
  std::set<int> roots;
  for (int v : verts) roots.insert(dsu.find(v));
  return static_cast<int>(roots.size());
}

struct ElementFactorizations {
  std::vector<Factorization> z;
  std::vector<Int> len;

  void load(const NumericalMonoid& S, Int n) {
    z = factorizations(S, n);
    len.clear();
    len.reserve(z.size());
    for (const auto& f : z) len.push_back(f.length());
  }
};

Int pair_distance(const Factorization& a, Int la, const Factorization& b, Int lb) {
  Int shared = 0;
  const std::size_t p = a.e.size();
  for (std::size_t i = 0; i < p; ++i) shared += std::min(a.e[i], b.e[i]);
  return std::max(la, lb) - shared;
}

// max over z in Z(n) with z_i = 0 of min over y in Z^i(n) of d(z, y),
// but only chasing contributions exceeding `lower`; returns max(lower, t_i).
// A factorization z can contribute at most max(|z|, min |y|), which prunes
// almost everything once `lower` is sizable.
Int tame_component_pruned(const ElementFactorizations& F, int i, Int lower) {
  std::vector<int> without;  // z_i == 0
  std::vector<int> with;     // z_i > 0
  for (int k = 0; k < static_cast<int>(F.z.size()); ++k) {
    (F.z[k].e[i] > 0 ? with : without).push_back(k);
  }
  if (without.empty() || with.empty()) return lower;
  Int min_with = kInf;
  for (int k : with) min_with = std::min(min_with, F.len[k]);
  std::sort(without.begin(), without.end(),
            [&](int a, int b) { return F.len[a] > F.len[b]; });
  Int best = lower;
  for (int k : without) {
    if (F.len[k] <= best && min_with <= best) break;
    if (std::max(F.len[k], min_with) <= best) continue;
    Int nearest = kInf;
    for (int j : with) {
      Int d = pair_distance(F.z[k], F.len[k], F.z[j], F.len[j]);
      if (d < nearest) {
        nearest = d;
        if (nearest <= best) break;
      }
    }
    if (nearest > best) best = nearest;
  }
  return best;
}

// Candidate elements for the tame degree: {w + n_i : w in Ap(S, n_j), j != i},
// either for one fixed index or for all indices.
std::set<Int> tame_candidates(const NumericalMonoid& S, std::optional<int> only_index) {
  const auto& g = S.generators();
  const int p = static_cast<int>(g.size());
  std::set<Int> cand;
  for (int j = 0; j < p; ++j) {
    std::vector<Int> ap = S.apery(g[j]);
    for (int i = 0; i < p; ++i) {
      if (i == j) continue;
      if (only_index && *only_index != i) continue;
      for (Int w : ap) cand.insert(checked_add(w, g[i]));
    }
  }
  return cand;
}

InvariantWitness tame_scan(const NumericalMonoid& S, std::optional<int> only_index,
                           const Deadline& dl) {
  require_invariants_defined(S);
  const auto& g = S.generators();
  const int p = static_cast<int>(g.size());
  Int bound = betti_scan_bound(S);
  std::vector<Int> maxlen = max_length_table(S, bound);

  std::set<Int> cand = tame_candidates(S, only_index);
  std::vector<Int> order(cand.begin(), cand.end());
  std::sort(order.begin(), order.end(), [&](Int a, Int b) {
    if (maxlen[a] != maxlen[b]) return maxlen[a] > maxlen[b];
    return a < b;
  });

  InvariantWitness result;
  ElementFactorizations F;
  for (Int n : order) {
    dl.check();
    if (maxlen[n] <= result.value) break;  // t(n) <= max L(n)
    F.load(S, n);
    for (int i = 0; i < p; ++i) {
      if (only_index && *only_index != i) continue;
      if (!S.contains(n - g[i])) continue;
      Int v = tame_component_pruned(F, i, result.value);
      if (v > result.value) {
        result.value = v;
        result.element = n;
      }
    }
  }
  return result;
}

}  // namespace

Int RClassPartition::mu() const {
  return *std::max_element(class_min_lengths.begin(), class_min_lengths.end());
}

ElementGraph element_graph(const NumericalMonoid& S, Int n) {
  require_member(S, n);
  const auto& g = S.generators();
  const int p = static_cast<int>(g.size());
  ElementGraph eg;
  eg.element = n;
  for (int i = 0; i < p; ++i) {
    if (S.contains(n - g[i])) eg.vertices.push_back(i);
  }
  Dsu dsu(p);
  for (std::size_t a = 0; a < eg.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < eg.vertices.size(); ++b) {
      int i = eg.vertices[a], j = eg.vertices[b];
      if (S.contains(n - g[i] - g[j])) {
        eg.edges.emplace_back(i, j);
        dsu.unite(i, j);
      }
    }
  }
  std::set<int> roots;
  for (int v : eg.vertices) roots.insert(dsu.find(v));
  eg.component_count = static_cast<int>(roots.size());
  return eg;
}

RClassPartition r_classes(const NumericalMonoid& S, Int n) {
  require_member(S, n);
  auto Z = factorizations(S, n);
  const int m = static_cast<int>(Z.size());
  const int p = S.embedding_dimension();
  Dsu dsu(m);
  // Factorizations sharing a support index all belong to one class, so it is
  // enough to chain together, per index, everything that uses it.
  for (int i = 0; i < p; ++i) {
    int prev = -1;
    for (int k = 0; k < m; ++k) {
      if (Z[k].e[i] == 0) continue;
      if (prev >= 0) dsu.unite(prev, k);
      prev = k;
    }
  }
  RClassPartition part;
  part.element = n;
  std::vector<int> class_of(m, -1);
  for (int k = 0; k < m; ++k) {
    int root = dsu.find(k);
    if (class_of[root] == -1) {
      class_of[root] = static_cast<int>(part.classes.size());
      part.classes.emplace_back();
      part.class_min_lengths.push_back(kInf);
    }
    int c = class_of[root];
    part.classes[c].push_back(Z[k]);
    part.class_min_lengths[c] = std::min(part.class_min_lengths[c], Z[k].length());
  }
  return part;
}

Int catenary_of_element(const NumericalMonoid& S, Int n) {
  require_member(S, n);
  ElementFactorizations F;
  F.load(S, n);
  const int m = static_cast<int>(F.z.size());
  if (m <= 1) return 0;
  // Minimax spanning structure, Prim style: grow a tree always along the
  // cheapest crossing edge; the largest edge used is the connectivity
  // threshold.
  std::vector<Int> best(m, kInf);
  std::vector<char> used(m, 0);
  best[0] = 0;
  Int answer = 0;
  for (int step = 0; step < m; ++step) {
    int k = -1;
    for (int v = 0; v < m; ++v) {
      if (!used[v] && (k == -1 || best[v] < best[k])) k = v;
    }
    used[k] = 1;
    answer = std::max(answer, best[k]);
    for (int v = 0; v < m; ++v) {
      if (used[v]) continue;
      Int d = pair_distance(F.z[k], F.len[k], F.z[v], F.len[v]);
      if (d < best[v]) best[v] = d;
    }
  }
  return answer;
}

Int betti_scan_bound(const NumericalMonoid& S) {
  return checked_add(S.frobenius(), checked_mul(2, S.largest_generator()));
}

std::vector<Int> betti_elements(const NumericalMonoid& S, const Deadline& dl) {
  require_invariants_defined(S);
  Int bound = betti_scan_bound(S);
  std::vector<Int> out;
  for (Int n = 1; n <= bound; ++n) {
    if ((n & 63) == 0) dl.check();
    if (!S.contains(n)) continue;
    if (graph_component_count(S, n) >= 2) out.push_back(n);
  }
  return out;
}

InvariantWitness catenary_degree_witnessed(const NumericalMonoid& S, const Deadline& dl) {
  require_invariants_defined(S);
  InvariantWitness result;
  for (Int n : betti_elements(S, dl)) {
    dl.check();
    Int m = r_classes(S, n).mu();
    if (m > result.value) {
      result.value = m;
      result.element = n;
    }
  }
  if (result.element == 0) throw Error("no Betti element found below the scan bound");
  return result;
}

Int catenary_degree(const NumericalMonoid& S, const Deadline& dl) {
  return catenary_degree_witnessed(S, dl).value;
}

Int min_multiple_in_rest(const NumericalMonoid& S) {
  if (S.embedding_dimension() < 2) {
    throw TooFewGenerators("need at least two generators");
  }
  const auto& g = S.generators();
  SubmonoidMembership rest(std::vector<Int>(g.begin() + 1, g.end()));
  for (Int k = 1;; ++k) {
    if (rest.contains(checked_mul(k, g.front()))) return k;  // k = n_2 always works
  }
}

Int tame_of_element_i(const NumericalMonoid& S, Int n, int atom_index) {
  require_member(S, n);
  const auto& g = S.generators();
  if (atom_index < 0 || atom_index >= static_cast<int>(g.size())) {
    throw NotAnAtom("atom index out of range");
  }
  if (!S.contains(n - g[atom_index])) {
    throw AtomNotBelow("n - n_i is not a member; t_i(n) is undefined");
  }
  ElementFactorizations F;
  F.load(S, n);
  return tame_component_pruned(F, atom_index, 0);
}

Int tame_of_element(const NumericalMonoid& S, Int n) {
  require_member(S, n);
  const auto& g = S.generators();
  ElementFactorizations F;
  F.load(S, n);
  Int best = 0;
  for (int i = 0; i < static_cast<int>(g.size()); ++i) {
    if (!S.contains(n - g[i])) continue;
    best = tame_component_pruned(F, i, best);
  }
  return best;
}

Int tame_degree_of_atom(const NumericalMonoid& S, int atom_index, const Deadline& dl) {
  if (atom_index < 0 || atom_index >= S.embedding_dimension()) {
    throw NotAnAtom("atom index out of range");
  }
  return tame_scan(S, atom_index, dl).value;
}

InvariantWitness tame_degree_witnessed(const NumericalMonoid& S, const Deadline& dl) {
  return tame_scan(S, std::nullopt, dl);
}

Int tame_degree(const NumericalMonoid& S, const Deadline& dl) {
  return tame_scan(S, std::nullopt, dl).value;
}

namespace {

// A factorization z is minimal for the atom b when b <=_S value(z) and
// dropping any single generator from z breaks that:  for every k in supp(z),
// value(z) - n_k - b is not a member.  Minimal factorizations satisfy
// value(z) <= b + frobenius + n_p, because value(z) - n_k - b must fall in a
// gap (or below zero).
bool minimal_for_atom(const NumericalMonoid& S, const Factorization& z, Int s, Int b) {
  const auto& g = S.generators();
  for (std::size_t k = 0; k < z.e.size(); ++k) {
    if (z.e[k] == 0) continue;
    if (S.contains(s - g[k] - b)) return false;
  }
  return true;
}

}  // namespace

OmegaWitness omega_witnessed(const NumericalMonoid& S, const Deadline& dl) {
  require_invariants_defined(S);
  const auto& g = S.generators();
  Int frob = S.frobenius();
  Int np = S.largest_generator();
  Int bound = checked_add(checked_add(np, frob), np);  // covers every atom's scan
  std::vector<Int> maxlen = max_length_table(S, bound);
  OmegaWitness best{0, g.front(), 0};
  for (Int s = 1; s <= bound; ++s) {
    if ((s & 63) == 0) dl.check();
    if (!S.contains(s) || maxlen[s] <= best.value) continue;
    for (const auto& z : factorizations(S, s)) {
      Int lz = z.length();
      if (lz <= best.value) continue;
      for (Int b : g) {
        if (s > b + frob + np) continue;
        if (!S.contains(s - b)) continue;
        if (minimal_for_atom(S, z, s, b)) {
          best = OmegaWitness{lz, b, s};
          break;
        }
      }
    }
  }
  return best;
}

Int omega(const NumericalMonoid& S, const Deadline& dl) { return omega_witnessed(S, dl).value; }

Int omega_of_atom(const NumericalMonoid& S, Int atom, const Deadline& dl) {
  require_invariants_defined(S);
  atom_index_of(S, atom);
  Int bound = checked_add(checked_add(atom, S.frobenius()), S.largest_generator());
  std::vector<Int> maxlen = max_length_table(S, bound);
  Int best = 0;
  for (Int s = atom; s <= bound; ++s) {
    if ((s & 63) == 0) dl.check();
    if (!S.contains(s) || !S.contains(s - atom) || maxlen[s] <= best) continue;
    for (const auto& z : factorizations(S, s)) {
      Int lz = z.length();
      if (lz <= best) continue;
      if (minimal_for_atom(S, z, s, atom)) best = lz;
    }
  }
  return best;
}

Int tau_of_atom(const NumericalMonoid& S, Int atom, const Deadline& dl) {
  require_invariants_defined(S);
  atom_index_of(S, atom);
  Int bound = checked_add(checked_add(atom, S.frobenius()), S.largest_generator());
  std::vector<Int> minlen = min_length_table(S, bound);
  Int best = 0;
  for (Int s = atom; s <= bound; ++s) {
    if ((s & 63) == 0) dl.check();
    if (!S.contains(s) || !S.contains(s - atom)) continue;
    Int v = minlen[s - atom];  // every qualifying factorization of s contributes this
    if (v <= best) continue;
    for (const auto& z : factorizations(S, s)) {
      if (minimal_for_atom(S, z, s, atom)) {
        best = v;
        break;
      }
    }
  }
  return best;
}

}  // namespace nsgp
