#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mmtp/multimatroid.hpp"

namespace mmtp {

// Independent near-transversals avoiding `cls`, grouped by slack element.
std::map<std::string, std::vector<std::set<std::string>>> slack_partition(const Multimatroid& z,
                                                                          const std::string& cls);

// Glue two tight multimatroids along ordered non-singular classes of equal
// size. The result is basis-defined: unions of independent near-transversals
// whose slack elements sit at different positions of their class orders.
Multimatroid two_sum(const Multimatroid& left, const std::string& left_class,
                     const Multimatroid& right, const std::string& right_class);

// Rank predicted for T1 + T2 (near-transversals avoiding the summed classes):
// r1(T1) + r2(T2), minus one when the slack positions coincide.
int two_sum_rank_formula(const Multimatroid& left, const std::string& left_class,
                         const std::set<std::string>& t1, const Multimatroid& right,
                         const std::string& right_class, const std::set<std::string>& t2);

// Composite element ids follow `<base>@<left-class>`.
struct TensorNaming {
  std::map<std::pair<std::string, std::string>, std::string> element;  // (left class, right elem) -> id
  std::map<std::pair<std::string, std::string>, std::string> skew;     // (left class, right class) -> name

  std::string element_name(const std::string& left_class, const std::string& right_elem) const;
};

struct TensorResult {
  Multimatroid product;
  TensorNaming naming;
};

// Two-sum a fresh copy of `right` (renamed through TensorNaming) along every
// skew class of `left`. `left` must be a tight q-matroid with all classes
// ordered and non-singular; `right` tight with `right_class` ordered,
// non-singular, of size q.
TensorResult tensor_product(const Multimatroid& left, const Multimatroid& right,
                            const std::string& right_class);

struct SumPart {
  std::string left_class;   // class of the base multimatroid
  Multimatroid factor;
  std::string factor_class;
};

// Builds base ⊕ parts and checks, for every transversal T of the composite,
// that n(T) decomposes as the base nullity of the slack-substituted
// transversal plus the part nullities.
bool nullity_decomposition_holds(const Multimatroid& base, const std::vector<SumPart>& parts);

// Copy of a multimatroid with elements and classes renamed by suffixing
// "@tag" (members of `keep_class` keep their names).
Multimatroid renamed_copy(const Multimatroid& z, const std::string& tag, const std::string& keep_class);

}  // namespace mmtp
