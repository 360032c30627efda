#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mmtp/multimatroid.hpp"
#include "mmtp/poly.hpp"

namespace mmtp {

// Ground set plus a family of subsets stored as bitmasks over the ground
// order. Construction checks structure only; the symmetric exchange axiom is
// checked by validate(), so invalid systems can be represented (twists and
// loop complements of arbitrary systems are needed for the vf-safety search).
class DeltaMatroid {
 public:
  DeltaMatroid(std::vector<std::string> ground, std::set<std::uint64_t> feasible);
  DeltaMatroid(std::vector<std::string> ground, const std::vector<std::set<std::string>>& feasible);

  const std::vector<std::string>& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  std::size_t index_of(const std::string& elem) const;
  const std::set<std::uint64_t>& feasible_masks() const { return feasible_; }
  std::vector<std::set<std::string>> feasible_sets() const;
  std::set<std::string> unmask(std::uint64_t mask) const;
  std::uint64_t mask_of(const std::set<std::string>& elems) const;

  AxiomReport validate() const;  // symmetric exchange, brute force
  bool is_valid() const { return validate().ok(); }
  bool is_even() const;
  bool is_matroid() const;

  bool is_loop(const std::string& elem) const;    // in no feasible set
  bool is_coloop(const std::string& elem) const;  // in every feasible set
  bool is_singular(const std::string& elem) const;

  DeltaMatroid twist(const std::set<std::string>& subset) const;
  // may yield a non-delta-matroid; validate() on the result tells
  DeltaMatroid loop_complement(const std::set<std::string>& subset) const;
  // +e *e +e; throws NotVfSafe when an intermediate or the result fails
  // symmetric exchange
  DeltaMatroid star_bar(const std::string& elem) const;
  DeltaMatroid star_bar_set(std::uint64_t mask) const;

  bool is_vf_safe() const;

  DeltaMatroid delete_element(const std::string& elem) const;
  DeltaMatroid contract_element(const std::string& elem) const;
  DeltaMatroid delete_elements(const std::set<std::string>& elems) const;

  // d(X) = min over feasible F of |F xor X|
  int distance(std::uint64_t mask) const;
  int distance_of(const std::set<std::string>& elems) const { return distance(mask_of(elems)); }

  int min_rank() const;  // rank of the minimum-cardinality matroid
  int max_rank() const;
  Rational sigma() const;  // (min_rank + max_rank) / 2
  Rational sigma_of(const std::set<std::string>& subset) const;  // sigma of the restriction

  bool same_family(const DeltaMatroid& other) const;

 private:
  std::uint64_t full_mask() const;

  std::vector<std::string> ground_;
  std::map<std::string, std::size_t> index_;
  std::set<std::uint64_t> feasible_;
};

// Naming scheme tying ground elements to skew-class members.
struct DmIndexing {
  // ground label -> element ids, in class order (dot, bar[, hat])
  std::map<std::string, std::vector<std::string>> classes;

  static DmIndexing suffix_scheme(const std::vector<std::string>& ground, std::size_t arity);
};

std::string dot_name(const std::string& e);
std::string bar_name(const std::string& e);
std::string hat_name(const std::string& e);

// The 2-matroid with bases { dot(X) + bar(E-X) : X feasible }.
Multimatroid delta_to_z2(const DeltaMatroid& d);
// The unique tight 3-matroid restricting to the 2-matroid above; exists
// exactly for vf-safe inputs. to_z3 throws NotVfSafe when validation of the
// candidate fails.
std::optional<Multimatroid> try_delta_to_z3(const DeltaMatroid& d);
Multimatroid delta_to_z3(const DeltaMatroid& d);
// Inverse along an explicit indexing: feasible sets are the X with
// dot(X)+bar(E-X) a basis.
DeltaMatroid delta_from_multimatroid(const Multimatroid& z, const DmIndexing& indexing);
DeltaMatroid delta_from_indexed(const Multimatroid& z);  // suffix-derived indexing

enum class DmCompositionMode { even, vf_safe };

DeltaMatroid delta_two_sum(const DeltaMatroid& d1, const std::string& f, const DeltaMatroid& d2,
                           const std::string& e, DmCompositionMode mode);
DeltaMatroid delta_tensor(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e,
                          DmCompositionMode mode);

// Multivariate transition polynomial over ordered 3-partitions, in variables
// u.<e>, v.<e>, w.<e> and t. Requires vf-safety.
MultiPoly delta_transition_multi(const DeltaMatroid& d);
// Two-variable transition polynomial in w, x, t.
MultiPoly delta_transition_two(const DeltaMatroid& d);

// Tutte polynomial of a delta-matroid: expanded into x, y when every exponent
// is integral, otherwise left in the shifted variables xm1 = x-1, ym1 = y-1 on
// the half grid.
MultiPoly delta_tutte(const DeltaMatroid& d);
// Matroid Tutte polynomial in x, y (requires is_matroid()).
MultiPoly matroid_tutte(const DeltaMatroid& m);
// Both sides of the square-substitution identity in variables s, u:
// s^(|E|-max_rank) u^(min_rank) R(D; s^2+1, u^2+1) and Q(D; s, u, s*u).
MultiPoly delta_tutte_square_form(const DeltaMatroid& d);
MultiPoly delta_transition_square_form(const DeltaMatroid& d);

int matroid_rank(const DeltaMatroid& m, std::uint64_t mask);

// Tensor-product identities. Each verifier checks its hypotheses (throws) and
// returns whether the identity holds.
bool verify_delta_tensor_multi(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e);
bool verify_delta_tensor_two(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e);
// Tutte-polynomial form at exact rational sample points (even inputs only).
bool verify_delta_tensor_tutte(const DeltaMatroid& d1, const DeltaMatroid& d2, const std::string& e,
                               int min_points = 25);
bool verify_matroid_tensor_tutte(const DeltaMatroid& m1, const DeltaMatroid& m2, const std::string& e,
                                 int min_points = 25);

}  // namespace mmtp
