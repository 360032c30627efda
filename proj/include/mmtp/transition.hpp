#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mmtp/compose.hpp"
#include "mmtp/multimatroid.hpp"
#include "mmtp/poly.hpp"

namespace mmtp {

// element id -> formal variable name or exact rational constant; elements
// absent from the map default to the formal variable x.<elem>
using WeightMap = std::map<std::string, std::variant<std::string, Rational>>;

std::string weight_variable(const std::string& elem);

// Q(Z) = sum over transversals of t^nullity times the product of weights.
MultiPoly transition_polynomial(const Multimatroid& z, const WeightMap& weights = {});

// y_j = sum over near-transversals avoiding `cls` whose slack element is the
// j-th member of the class order, of t^nullity times the weight product.
// Requires a tight multimatroid and an ordered non-singular class.
std::vector<MultiPoly> slack_sums(const Multimatroid& z, const std::string& cls,
                                  const WeightMap& weights = {});

// Q(Z|e_i) = t*y_i + sum of the other y_j, for every member e_i of `cls`.
bool linear_system_holds(const Multimatroid& z, const std::string& cls);

// Right side of the tensor-product formula: Q(left) with the variable of the
// j-th member of each left class replaced by y_j, renamed into the composite
// copy for that class.
MultiPoly brylawski_rhs(const Multimatroid& left, const Multimatroid& right,
                        const std::string& right_class, const TensorNaming& naming);

}  // namespace mmtp
