#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mmtp/error.hpp"

namespace mmtp {

struct SkewClass {
  std::string name;
  std::vector<std::string> elems;  // element order is meaningful only when `ordered`
  bool ordered = false;
};

class Carrier {
 public:
  Carrier() = default;
  explicit Carrier(std::vector<SkewClass> classes);

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<SkewClass>& classes() const { return classes_; }
  const SkewClass& skew_class(std::size_t c) const { return classes_.at(c); }

  std::size_t class_index(const std::string& name) const;
  bool has_class(const std::string& name) const { return class_lookup_.count(name) > 0; }
  // element id -> (class index, member index)
  std::pair<std::size_t, std::size_t> locate(const std::string& elem) const;
  bool has_element(const std::string& elem) const { return elem_lookup_.count(elem) > 0; }

  std::size_t element_count() const;
  bool all_classes_of_size(std::size_t q) const;

 private:
  std::vector<SkewClass> classes_;
  std::map<std::string, std::size_t> class_lookup_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> elem_lookup_;
};

// One entry per skew class: kAbsent or the member index within the class.
using Selection = std::vector<int>;
inline constexpr int kAbsent = -1;

std::size_t selection_size(const Selection& s);

struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// A multimatroid over a carrier. Either defined directly by a list of
// transversal bases (rank = largest intersection with a basis), or derived
// from another multimatroid as an elementary minor / restriction, in which
// case rank queries delegate to the root with the removed elements pinned.
class Multimatroid {
 public:
  Multimatroid(Carrier carrier, const std::vector<std::set<std::string>>& bases);

  const Carrier& carrier() const { return carrier_; }
  bool is_basis_defined() const { return pins_.empty() && !projected_; }

  int rank(const Selection& s) const;
  int rank_of(const std::set<std::string>& elems) const { return rank(to_selection(elems)); }
  int nullity(const Selection& s) const { return static_cast<int>(selection_size(s)) - rank(s); }
  int nullity_of(const std::set<std::string>& elems) const { return nullity(to_selection(elems)); }

  // Throws NotASubtransversal when two ids share a skew class, UnknownElement
  // when an id is not in the carrier.
  Selection to_selection(const std::set<std::string>& elems) const;
  std::set<std::string> to_elements(const Selection& s) const;

  std::vector<Selection> transversals() const;
  std::vector<Selection> near_transversals() const;  // grouped by missing class
  std::vector<Selection> subtransversals() const;

  AxiomReport check_axioms() const;
  bool is_nondegenerate() const;
  bool is_tight() const;

  // The unique rank-preserving extension of a near-transversal. Throws
  // NotNearTransversal, or NotTight when existence/uniqueness fails.
  std::string slack_element(const std::set<std::string>& near) const;
  int slack_member(const Selection& near, std::size_t missing_class) const;

  Multimatroid minor(const std::string& elem) const;       // drops the element's class
  Multimatroid restrict_to(const std::set<std::string>& elems) const;

  bool is_singular_element(const std::string& elem) const;
  bool is_singular_class(const std::string& cls) const;

  // Same class labels with the same element sets, and the same rank function
  // on every subtransversal.
  bool equals(const Multimatroid& other) const;

  // Stored bases for basis-defined multimatroids; maximal independent
  // subtransversals found by search otherwise.
  std::vector<std::set<std::string>> basis_sets() const;
  std::vector<Selection> basis_selections() const;

  std::vector<std::set<std::string>> maximal_independent_sets() const;

 private:
  struct Root {
    Carrier carrier;
    std::vector<Selection> bases;
    int rank(const Selection& s) const;
  };

  Multimatroid() = default;

  int root_rank_with_pins(const Selection& visible) const;

  std::shared_ptr<const Root> root_;
  Carrier carrier_;  // visible carrier
  // mapping of visible (class, member) onto root coordinates
  std::vector<std::size_t> class_map_;
  std::vector<std::vector<std::size_t>> member_map_;
  std::vector<std::pair<std::size_t, std::size_t>> pins_;  // root coordinates
  int pin_rank_ = 0;
  bool projected_ = false;  // true for minors/restrictions
};

}  // namespace mmtp
