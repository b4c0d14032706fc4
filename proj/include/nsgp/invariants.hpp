#pragma once

#include <chrono>
#include <optional>
#include <utility>
#include <vector>

#include "nsgp/factorization.hpp"
#include "nsgp/monoid.hpp"

namespace nsgp {

/// Cooperative deadline for long-running scans.  A default-constructed
/// Deadline never expires.  Scans poll check(), which throws Timeout once the
/// deadline has passed.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget) {
    Deadline d;
    d.at_ = std::chrono::steady_clock::now() + budget;
    return d;
  }
  bool expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }
  void check() const {
    if (expired()) throw Timeout("computation exceeded its time budget");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

/// The partition of Z(n) into R-classes (connectivity under shared support),
/// with each class's minimum factorization length.
struct RClassPartition {
  Int element = 0;
  std::vector<std::vector<Factorization>> classes;
  std::vector<Int> class_min_lengths;  // aligned with classes

  Int mu() const;  // max of class_min_lengths
};

/// The graph on generator indices attached to an element: vertex i iff
/// n - n_i is a member, edge {i,j} iff n - (n_i + n_j) is a member.  Its
/// component count equals the number of R-classes of n (for n > 0).
struct ElementGraph {
  Int element = 0;
  std::vector<int> vertices;                // 0-based generator indices
  std::vector<std::pair<int, int>> edges;   // i < j
  int component_count = 0;
};

ElementGraph element_graph(const NumericalMonoid& S, Int n);

RClassPartition r_classes(const NumericalMonoid& S, Int n);

/// c(n): the least N such that the graph on Z(n) with edges of distance <= N
/// is connected (0 when n has at most one factorization).  Computed as the
/// bottleneck of a minimax spanning structure on the complete distance graph.
Int catenary_of_element(const NumericalMonoid& S, Int n);

/// Scan bound for elements with more than one R-class: above
/// frobenius + 2 * largest generator, every n - n_i - n_j is a member, so the
/// element graph is complete and n has a single R-class.
Int betti_scan_bound(const NumericalMonoid& S);

/// All elements with at least two R-classes, ascending.
std::vector<Int> betti_elements(const NumericalMonoid& S, const Deadline& dl = {});

struct InvariantWitness {
  Int value = 0;
  Int element = 0;  // an element attaining the value
};

/// c(S) as the maximum over Betti elements of the largest class-minimum
/// length.
Int catenary_degree(const NumericalMonoid& S, const Deadline& dl = {});
InvariantWitness catenary_degree_witnessed(const NumericalMonoid& S, const Deadline& dl = {});

/// min{k >= 1 : k * n_1 lies in the submonoid of the remaining generators}.
Int min_multiple_in_rest(const NumericalMonoid& S);

/// t_i(n) = max over z in Z(n) of d(z, Z^i(n)), where Z^i(n) is the set of
/// factorizations using generator index i.  Requires n - n_i in S.
Int tame_of_element_i(const NumericalMonoid& S, Int n, int atom_index);

/// t(n) = max of t_i(n) over indices with n - n_i in S; 0 when none qualify.
Int tame_of_element(const NumericalMonoid& S, Int n);

/// t_i(S) = max over n of t_i(n).  Complete by scanning the candidate set
/// {w + n_i : w in Ap(S, n_j), j != i}: a minimal element attaining t_i(S)
/// has n - n_i in Ap(S, n_j) for every j in the support of a realizing
/// factorization.
Int tame_degree_of_atom(const NumericalMonoid& S, int atom_index, const Deadline& dl = {});

/// t(S) = max of t_i(S).
Int tame_degree(const NumericalMonoid& S, const Deadline& dl = {});
InvariantWitness tame_degree_witnessed(const NumericalMonoid& S, const Deadline& dl = {});

struct OmegaWitness {
  Int value = 0;
  Int atom = 0;     // the atom attaining omega(S)
  Int element = 0;  // the value of a longest minimal factorization
};

/// omega(S, b) for an atom b: the maximum length of a factorization z with
/// b <=_S value(z) and, for every k in supp(z), b not <=_S value(z) - n_k.
/// Such z satisfy value(z) <= b + frobenius + largest generator, which bounds
/// the scan.
Int omega_of_atom(const NumericalMonoid& S, Int atom, const Deadline& dl = {});

/// omega(S) = max over atoms.
Int omega(const NumericalMonoid& S, const Deadline& dl = {});
OmegaWitness omega_witnessed(const NumericalMonoid& S, const Deadline& dl = {});

/// tau(S, b) for an atom b: the maximum of min L(a - b) over elements a with
/// b <=_S a admitting a factorization z such that for every k in supp(z),
/// b not <=_S a - n_k.  Same scan bound as omega_of_atom.
Int tau_of_atom(const NumericalMonoid& S, Int atom, const Deadline& dl = {});

}  // namespace nsgp
