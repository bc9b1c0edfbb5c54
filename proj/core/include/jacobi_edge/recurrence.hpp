#pragma once

#include <string>
#include <utility>

#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/lambda_series.hpp"
#include "jacobi_edge/poly.hpp"
#include "jacobi_edge/special.hpp"

namespace jacobi_edge {

/// Coefficients A_p, B_p, D_p, E_p of the Selberg differential-difference
/// system at index p for an n-dimensional integral.
template <class Field>
struct RecurrenceCoeffs {
  Field a_p;
  Field b_p;
  Field d_p;
  Field e_p;
};

template <class Field>
RecurrenceCoeffs<Field> coeffs(long p, long n, const Field& lambda1, const Field& lambda2, const Field& beta,
                               const Field& alpha) {
  if (p < 0 || p > n) throw InvalidParameters("coeffs requires 0 <= p <= n");
  const Field half_beta = beta / Field(2);
  const Field np(n - p);
  RecurrenceCoeffs<Field> c;
  c.a_p = np * (lambda1 + lambda2 + beta * Field(n - p - 1) + Field(2) * (alpha + Field(1)));
  c.b_p = Field(p - n) * (lambda1 + alpha + Field(1) + half_beta * Field(n - p - 1));
  c.d_p = Field(p) * (half_beta * np + alpha + Field(1));
  c.e_p = lambda1 + lambda2 + Field(1) + half_beta * Field(2 * n - p - 2) + alpha + Field(1);
  return c;
}

/// One full sweep of the transformed (normalized) recurrence in the plain
/// polynomial representation: J~_0 at exponent alpha_from to J~_0 at
/// alpha_from + 1. `lambda2` enters only through the coefficients; it is 0
/// for gap probabilities and the (1-u) weight exponent for densities.
Poly sweep_poly(const Poly& seed, long n, const Rational& lambda1, const Rational& beta, const Rational& alpha_from,
                const Rational& lambda2 = 0);

/// Polynomial pair (P, Q) standing for P f + Q f' with f = 2F1(hyp; s).
struct HypPair {
  Poly p_poly;
  Poly q_poly;
  HypParams hyp;
};

/// Hypergeometric-pair analogue of sweep_poly.
HypPair sweep_hyp(const HypPair& seed, long n, const Rational& lambda1, const Rational& beta,
                  const Rational& alpha_from, const Rational& lambda2 = 0);

/// One full sweep of the untransformed system
///   (n-p) E_p J_{p+1} = (A_p x + B_p) J_p - x(x-1) J_p' + D_p x(x-1) J_{p-1}
/// over any series type supporting add_mul_x, add_euler, add_mul_x_xm1,
/// add_scaled, scale and empty_like.
template <class Series, class Field>
Series sweep_generic(const Series& seed, long n, const Field& lambda1, const Field& lambda2, const Field& beta,
                     const Field& alpha) {
  Series prev = seed.empty_like();
  Series cur = seed;
  for (long p = 0; p < n; ++p) {
    const auto c = coeffs<Field>(p, n, lambda1, lambda2, beta, alpha);
    const Field pivot = Field(n - p) * c.e_p;
    if (is_zero(pivot)) {
      throw InvalidParameters("recurrence pivot (N-p)E_p vanishes at p = " + std::to_string(p) +
                              "; parameters outside the admissible region");
    }
    Series next = cur.empty_like();
    next.add_mul_x(cur, c.a_p);
    next.add_scaled(cur, c.b_p);
    next.add_euler(cur, Field(-1));
    next.add_mul_x_xm1(prev, c.d_p);
    next.scale(Field(1) / pivot);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// sweep_generic on the (1-x)-power series representation; enforces the
/// l >= 0 invariant on exit.
template <class Field>
LambdaSeries<Field> sweep_series(const LambdaSeries<Field>& seed, long n, const Field& lambda1, const Field& lambda2,
                                 const Field& beta, const Field& alpha_from) {
  auto out = sweep_generic(seed, n, lambda1, lambda2, beta, alpha_from);
  out.check_exit_invariant();
  return out;
}

}  // namespace jacobi_edge
