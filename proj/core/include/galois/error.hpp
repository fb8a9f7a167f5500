#pragma once

#include <stdexcept>
#include <string>

namespace galois {

/// Classified failure modes. The CLI maps these onto process exit codes;
/// library callers can switch on kind() instead of parsing messages.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    parse_error,          // malformed polynomial text
    degree_out_of_range,  // degree 0 or > 5, or zero polynomial
    reducible_input,      // irreducibility gate failed; message names a factor
    numeric_ambiguity,    // tolerances cannot separate orderings / decide integrality
    convergence_failure,  // root iteration exhausted its budget
    precision_exceeded,   // coefficients overflow double precision
    internal_invariant,   // contradiction that indicates a bug, not bad input
  };

  Error(Kind kind, std::string message) : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace galois
