#include "mmtp/error.hpp"

namespace mmtp {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::malformed: return "Malformed";
    case Errc::unknown_element: return "UnknownElement";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::not_a_subtransversal: return "NotASubtransversal";
    case Errc::not_near_transversal: return "NotNearTransversal";
    case Errc::not_tight: return "NotTight";
    case Errc::unordered_class: return "UnorderedClass";
    case Errc::singular_class: return "SingularClass";
    case Errc::singular_element: return "SingularElement";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::not_q_matroid: return "NotQMatroid";
    case Errc::missing_assignment: return "MissingAssignment";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_vf_safe: return "NotVfSafe";
    case Errc::mode_hypothesis: return "ModeHypothesisViolated";
    case Errc::missing_distinguished_arrow: return "MissingDistinguishedArrow";
    case Errc::hypothesis: return "HypothesisViolated";
  }
  return "Error";
}

}  // namespace mmtp
