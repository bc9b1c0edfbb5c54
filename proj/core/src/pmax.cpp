#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/recurrence.hpp"

namespace jacobi_edge {

namespace {

// Gamma monomial of N J_{N-1, l1, beta, beta} / J_{N, l1, l2, beta}, the
// constant in front of the (N-1)-dimensional integral left after fixing the
// largest eigenvalue.
GammaProduct density_constant(const JacobiParams& p) {
  GammaProduct prod;
  append_selberg_factors(prod, p.lambda1, p.beta, p.beta, p.n - 1, 1);
  append_selberg_factors(prod, p.lambda1, p.lambda2, p.beta, p.n, -1);
  return prod;
}

}  // namespace

PolyDensityForm pmax_case1(const JacobiParams& params) {
  params.validate();
  if (!params.admits(CaseKind::case1)) throw InvalidParameters("pmax case1: " + params.diagnosis());
  const long l2 = to_long(params.lambda2);

  Poly j = Poly::constant(Var::s, 1);
  for (long alpha = 0; alpha < l2; ++alpha) {
    j = sweep_poly(j, params.n - 1, params.lambda1, params.beta, Rational(alpha), params.beta);
  }
  const auto constant = gamma_product_exact(density_constant(params));
  if (!constant) throw NumericFailure("pmax case1: normalization is not rational");
  j *= *constant * params.n;

  PolyDensityForm form{params, gap_exponent0(params) - 1, params.lambda2, j.coeffs()};

  // Must agree with the derivative of the gap polynomial:
  // e G + s G' = (1-s)^lambda2 * density polynomial.
  const PolyDensityForm from_gap = differentiate(gap_case1(params));
  Poly rhs = j;
  const Poly one_minus(Var::s, {1, -1});
  for (long i = 0; i < l2; ++i) rhs *= one_minus;
  if (!(rhs == Poly(Var::s, from_gap.gamma))) {
    throw VerificationFailure("pmax case1: density is not the derivative of the gap polynomial");
  }
  return form;
}

HypDensityForm pmax_case2(const Rational& lambda1, const Rational& beta, long k, long n) {
  const JacobiParams params = case2_params(lambda1, beta, k, n);
  const Rational half_beta = beta / 2;
  HypPair pair{Poly::constant(Var::s, 1), Poly(Var::s),
               HypParams{beta * (n - 1) / 2, half_beta * (n - 2) + lambda1 + 1, beta * (n - 1) + lambda1 + 2}};
  for (long i = 0; i < k; ++i) pair = sweep_hyp(pair, n - 1, lambda1, beta, Rational(-half_beta + i), beta);

  HypDensityForm form;
  form.params = params;
  form.k = k;
  form.exponent = gap_exponent0(params) - 1;
  form.one_minus_power = params.lambda2;
  form.p_poly = std::move(pair.p_poly);
  form.q_poly = std::move(pair.q_poly);
  form.hyp = pair.hyp;
  form.log_norm = log(Real(n)) + gamma_product_log(density_constant(params));
  form.norm = exp(form.log_norm);
  return form;
}

}  // namespace jacobi_edge
