#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mmtp/numeric.hpp"

namespace mmtp {

// Exponents live on a half-unit grid: a stored value of 2 means exponent 1,
// a stored value of 3 means exponent 3/2. Zero exponents are never stored.
// The variable name "t" is reserved for the nullity-tracking variable and is
// printed last within a term.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(const std::string& name, int half_units = 2);

  // 0 when the variable is absent.
  int half_exponent(const std::string& name) const;
  bool empty() const { return factors_.empty(); }
  const std::vector<std::pair<std::string, int>>& factors() const { return factors_; }

  Monomial times(const Monomial& other) const;
  Monomial pow(int k) const;

  bool has_negative_exponent() const;
  bool integral() const;  // every stored exponent is a whole number of units

  bool operator==(const Monomial& other) const { return factors_ == other.factors_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }
  // Canonical term order: ascending t-exponent, then lexicographic on the
  // remaining (name, exponent) sequence with names ascending and exponents
  // descending.
  bool operator<(const Monomial& other) const;

  std::string to_string() const;  // "1" for the empty monomial

 private:
  friend class MultiPoly;
  std::vector<std::pair<std::string, int>> factors_;  // sorted by name, no zeros
};

// Sparse multivariate polynomial with exact rational coefficients in canonical
// form (no zero coefficients, terms ordered by Monomial's total order). All
// polynomials produced by the transition/Tutte operations have integer
// coefficients and integral nonnegative exponents; rational coefficients only
// appear through numeric weight specialisation.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero

  static MultiPoly zero() { return {}; }
  static MultiPoly one() { return constant(1); }
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const std::string& name);
  static MultiPoly term(const Monomial& m, const Rational& c, bool laurent = false);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  bool laurent() const { return laurent_; }

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly operator+(const MultiPoly& other) const;
  MultiPoly operator-(const MultiPoly& other) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& other) const;
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly times(const Rational& c) const;
  MultiPoly pow(unsigned k) const;

  bool operator==(const MultiPoly& other) const { return terms_ == other.terms_; }
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  // Simultaneous substitution; variables absent from the map are unchanged.
  // A variable with a fractional or negative exponent can only be replaced by
  // a plain variable (a renaming); anything else throws.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& images) const;
  MultiPoly rename(const std::map<std::string, std::string>& names) const;

  // Every variable must be assigned and every exponent integral. Throws
  // Errc::missing_assignment / Errc::division_by_zero.
  Rational evaluate(const std::map<std::string, Rational>& point) const;

  std::vector<std::string> variables() const;  // sorted, distinct
  int max_half_exponent(const std::string& name) const;
  bool integral_exponents() const;
  bool nonnegative_exponents() const;
  Rational coefficient(const Monomial& m) const;

  // Canonical text form, e.g. "u^3 + 2*u*v^2 + 3*u^2*v*t". This is the CLI
  // output contract: byte-identical for equal polynomials.
  std::string to_string() const;
  static MultiPoly parse(const std::string& text);

 private:
  void add_term(const Monomial& m, const Rational& c);

  std::map<Monomial, Rational> terms_;
  bool laurent_ = false;
};

}  // namespace mmtp
