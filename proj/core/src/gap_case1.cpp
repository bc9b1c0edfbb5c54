#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/recurrence.hpp"

namespace jacobi_edge {

PolyGapForm gap_case1(const JacobiParams& params) {
  params.validate();
  if (!params.admits(CaseKind::case1)) throw InvalidParameters("case1: " + params.diagnosis());
  const long l2 = to_long(params.lambda2);

  Poly j = Poly::constant(Var::s, 1);
  for (long alpha = 0; alpha < l2; ++alpha) {
    j = sweep_poly(j, params.n, params.lambda1, params.beta, Rational(alpha));
    if (j[0] != 1) throw VerificationFailure("case1: normalization J(0) = 1 lost after a sweep");
  }
  j *= selberg_ratio_exact(params.lambda1, l2, params.beta, params.n);

  PolyGapForm form{params, gap_exponent0(params), j.coeffs()};
  if (j.sum_of_coeffs() != 1) {
    throw VerificationFailure("case1: coefficient sum is " + to_canonical_string(j.sum_of_coeffs()) + ", expected 1");
  }
  return form;
}

PolyDensityForm differentiate(const PolyGapForm& form) {
  // d/ds s^e G(s) = s^(e-1) (e G + s G').
  const Poly g(Var::s, form.gamma);
  const Poly d = g * form.exponent0 + g.derivative().shifted(1);
  return {form.params, form.exponent0 - 1, Rational(0), d.coeffs()};
}

}  // namespace jacobi_edge
