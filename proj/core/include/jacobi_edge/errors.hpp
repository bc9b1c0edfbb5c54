#pragma once

#include <stdexcept>
#include <string>

namespace jacobi_edge {

/// Parameters outside the admissible range of the requested computation.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric or exact computation could not be completed.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Singular pivot in the Frobenius back-substitution. Callers are expected to
/// fall back to the nested integration scheme.
class ResonanceError : public NumericFailure {
 public:
  ResonanceError(const std::string& what, int solution_index, int order, int component)
      : NumericFailure(what), solution_index_(solution_index), order_(order), component_(component) {}

  int solution_index() const noexcept { return solution_index_; }
  int order() const noexcept { return order_; }
  int component() const noexcept { return component_; }

 private:
  int solution_index_;
  int order_;
  int component_;
};

/// An internal consistency check (sum rule, degree bound, cross-check) failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace jacobi_edge
