#pragma once

#include <stdexcept>
#include <string>

namespace mmtp {

enum class Errc {
  malformed,               // unreadable/ill-formed structure data
  unknown_element,
  unknown_edge,
  not_a_subtransversal,
  not_near_transversal,
  not_tight,
  unordered_class,
  singular_class,
  singular_element,
  size_mismatch,
  not_q_matroid,
  missing_assignment,
  division_by_zero,
  not_vf_safe,
  mode_hypothesis,
  missing_distinguished_arrow,
  hypothesis,              // generic theorem-hypothesis violation
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

  // True for violated preconditions of an operation (as opposed to unreadable input).
  bool is_hypothesis_violation() const {
    return code_ != Errc::malformed && code_ != Errc::unknown_element &&
           code_ != Errc::unknown_edge;
  }

 private:
  Errc code_;
};

}  // namespace mmtp
