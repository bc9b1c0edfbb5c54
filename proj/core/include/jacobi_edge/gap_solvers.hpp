#pragma once

#include <string>
#include <variant>

#include "jacobi_edge/forms.hpp"

namespace jacobi_edge {

enum class Scheme { automatic, case1, case2, case3_frobenius, case3_nested };

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme s);

/// Case (1): lambda2 a non-negative integer. Exact polynomial form.
PolyGapForm gap_case1(const JacobiParams& params);

/// Case (2): lambda2 = -beta/2 + k. Polynomial pair times a Gauss 2F1.
HypGapForm gap_case2(const Rational& lambda1, const Rational& beta, long k, long n);

/// Case (3) by Frobenius series of the matrix ODE about x = 1. Throws
/// ResonanceError on a singular pivot and NumericFailure when the
/// proportionality constants are not rational (odd beta); callers fall back
/// to gap_case3_nested.
EdgeSeriesForm gap_case3_frobenius(const JacobiParams& params);

/// The Frobenius solutions themselves, indexed by q = 0..N.
std::vector<FrobeniusSolution> frobenius_solutions(const JacobiParams& params);

/// Case (3) by nested integration, exact for every integer beta.
EdgeSeriesForm gap_case3_nested(const JacobiParams& params);

/// Largest-eigenvalue density, case (1).
PolyDensityForm pmax_case1(const JacobiParams& params);

/// Largest-eigenvalue density, case (2).
HypDensityForm pmax_case2(const Rational& lambda1, const Rational& beta, long k, long n);

/// Exact derivative of a case-(1) gap form.
PolyDensityForm differentiate(const PolyGapForm& form);

using GapForm = std::variant<PolyGapForm, HypGapForm, EdgeSeriesForm>;
using DensityForm = std::variant<PolyDensityForm, HypDensityForm, EdgeDensityForm>;

/// Dispatches on the scheme; `automatic` prefers case1, then case2, then
/// Frobenius with nested fallback.
GapForm solve_gap(const JacobiParams& params, Scheme scheme = Scheme::automatic);
DensityForm solve_pmax(const JacobiParams& params, Scheme scheme = Scheme::automatic);

/// Default s used in place of s = 1 for hypergeometric forms.
inline constexpr double default_endpoint_eps = 1e-6;

Real evaluate(const PolyGapForm& form, const Real& s);
Real evaluate(const PolyDensityForm& form, const Real& s);
Real evaluate(const HypGapForm& form, const Real& s, double endpoint_eps = default_endpoint_eps);
Real evaluate(const HypDensityForm& form, const Real& s, double endpoint_eps = default_endpoint_eps);
Real evaluate(const EdgeSeriesForm& form, const Real& s);
Real evaluate(const EdgeDensityForm& form, const Real& s);
Real evaluate(const GapForm& form, const Real& s, double endpoint_eps = default_endpoint_eps);
Real evaluate(const DensityForm& form, const Real& s, double endpoint_eps = default_endpoint_eps);

/// Smallest-eigenvalue density p_min(s; lambda1, lambda2) = p_max(1-s; lambda2, lambda1).
DensityForm solve_pmin(const JacobiParams& params, Scheme scheme = Scheme::automatic);
Real pmin(const JacobiParams& params, const Real& s);

/// Checks that a gap form is non-decreasing with values in [0, 1] on an
/// evenly spaced grid; throws VerificationFailure otherwise.
void check_monotone_gap(const GapForm& form, int points = 101, double tol = 1e-12);

}  // namespace jacobi_edge
