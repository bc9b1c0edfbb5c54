#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/recurrence.hpp"

namespace jacobi_edge {

HypGapForm gap_case2(const Rational& lambda1, const Rational& beta, long k, long n) {
  const JacobiParams params = case2_params(lambda1, beta, k, n);
  const Rational half_beta = beta / 2;
  HypPair pair{Poly::constant(Var::s, 1), Poly(Var::s),
               HypParams{beta * n / 2, half_beta * (n - 1) + lambda1 + 1, beta * (n - 1) + lambda1 + 2}};
  for (long i = 0; i < k; ++i) pair = sweep_hyp(pair, n, lambda1, beta, Rational(-half_beta + i));

  if (pair.p_poly.degree() > k * n || pair.q_poly.degree() > k * (n + 1)) {
    throw VerificationFailure("case2: polynomial degrees exceed the (kN, k(N+1)) bound");
  }
  HypGapForm form;
  form.params = params;
  form.k = k;
  form.exponent0 = gap_exponent0(params);
  form.p_poly = std::move(pair.p_poly);
  form.q_poly = std::move(pair.q_poly);
  form.hyp = pair.hyp;
  form.log_norm = selberg_log(lambda1, 0, beta, n) - selberg_log(lambda1, params.lambda2, beta, n);
  form.norm = exp(form.log_norm);
  return form;
}

}  // namespace jacobi_edge
