#include "jacobi_edge/recurrence.hpp"

namespace jacobi_edge {

namespace {

// Linear multiplier L_p(x) = A_p - (n alpha + p) + (B_p + n alpha + p) x of
// the transformed recurrence.
Poly affine_multiplier(const RecurrenceCoeffs<Rational>& c, long n, long p, const Rational& alpha) {
  const Rational shift = n * alpha + p;
  return Poly(Var::s, {c.a_p - shift, c.b_p + shift});
}

Rational checked_pivot(const RecurrenceCoeffs<Rational>& c, long n, long p) {
  const Rational pivot = (n - p) * c.e_p;
  if (sgn(pivot) == 0) {
    throw InvalidParameters("recurrence pivot (N-p)E_p vanishes at p = " + std::to_string(p) +
                            "; parameters outside the admissible region");
  }
  return pivot;
}

const Poly& one_minus_s() {
  static const Poly p(Var::s, {1, -1});
  return p;
}

const Poly& s_one_minus_s() {
  static const Poly p(Var::s, {0, 1, -1});
  return p;
}

}  // namespace

Poly sweep_poly(const Poly& seed, long n, const Rational& lambda1, const Rational& beta, const Rational& alpha_from,
                const Rational& lambda2) {
  Poly prev(Var::s);
  Poly cur = seed;
  for (long p = 0; p < n; ++p) {
    const auto c = coeffs<Rational>(p, n, lambda1, lambda2, beta, alpha_from);
    const Rational inv = 1 / checked_pivot(c, n, p);
    Poly next = affine_multiplier(c, n, p, alpha_from) * cur;
    next += s_one_minus_s() * cur.derivative();
    if (!prev.is_zero() && sgn(c.d_p) != 0) next += (one_minus_s() * prev) * c.d_p;
    next *= inv;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

HypPair sweep_hyp(const HypPair& seed, long n, const Rational& lambda1, const Rational& beta,
                  const Rational& alpha_from, const Rational& lambda2) {
  const HypParams& h = seed.hyp;
  const Rational ab = h.a * h.b;
  // f'' = [ab f - (c - (a+b+1) x) f'] / (x (1-x)), so x(1-x) (Q f')' folds
  // back onto the (f, f') basis.
  const Poly hyp_lin(Var::s, {h.c, -(h.a + h.b + 1)});
  Poly p_prev(Var::s);
  Poly q_prev(Var::s);
  Poly p_cur = seed.p_poly;
  Poly q_cur = seed.q_poly;
  for (long p = 0; p < n; ++p) {
    const auto c = coeffs<Rational>(p, n, lambda1, lambda2, beta, alpha_from);
    const Rational inv = 1 / checked_pivot(c, n, p);
    const Poly lin = affine_multiplier(c, n, p, alpha_from);
    Poly p_next = lin * p_cur + s_one_minus_s() * p_cur.derivative() + q_cur * ab;
    Poly q_next = lin * q_cur + s_one_minus_s() * (p_cur + q_cur.derivative()) - hyp_lin * q_cur;
    if (sgn(c.d_p) != 0) {
      p_next += (one_minus_s() * p_prev) * c.d_p;
      q_next += (one_minus_s() * q_prev) * c.d_p;
    }
    p_next *= inv;
    q_next *= inv;
    p_prev = std::move(p_cur);
    q_prev = std::move(q_cur);
    p_cur = std::move(p_next);
    q_cur = std::move(q_next);
  }
  return {std::move(p_cur), std::move(q_cur), h};
}

}  // namespace jacobi_edge
