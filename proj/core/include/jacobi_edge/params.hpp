#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacobi_edge/rational.hpp"

namespace jacobi_edge {

enum class CaseKind { case1, case2, case3 };

std::string to_string(CaseKind c);

/// Jacobi ensemble parameters: weight x^lambda1 (1-x)^lambda2, repulsion
/// |x_j - x_k|^beta, n eigenvalues.
struct JacobiParams {
  Rational lambda1;
  Rational lambda2;
  Rational beta;
  long n = 1;

  /// Throws InvalidParameters unless lambda1, lambda2 > -1, beta > 0, n >= 1.
  void validate() const;

  /// k with lambda2 = -beta/2 + k, when that k is a non-negative integer.
  std::optional<long> case2_k() const;

  bool admits(CaseKind c) const;
  /// Admissible cases in preference order (case1, case2, case3).
  std::vector<CaseKind> admissible_cases() const;
  /// Human-readable reason each case is rejected.
  std::string diagnosis() const;

  /// Swaps the roles of the two endpoints.
  JacobiParams reflected() const { return {lambda2, lambda1, beta, n}; }
};

/// Builds case-(2) parameters: lambda2 = -beta/2 + k.
JacobiParams case2_params(const Rational& lambda1, const Rational& beta, long k, long n);

/// N (lambda1 + 1) + beta N (N - 1) / 2.
Rational gap_exponent0(const JacobiParams& p);

}  // namespace jacobi_edge
