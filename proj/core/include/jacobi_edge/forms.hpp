#pragma once

#include <map>
#include <utility>
#include <vector>

#include "jacobi_edge/params.hpp"
#include "jacobi_edge/poly.hpp"
#include "jacobi_edge/real.hpp"
#include "jacobi_edge/special.hpp"

namespace jacobi_edge {

/// E(s) = s^exponent0 * sum_p gamma[p] s^p.
struct PolyGapForm {
  JacobiParams params;
  Rational exponent0;
  std::vector<Rational> gamma;
};

/// p(s) = s^exponent (1-s)^one_minus_power * sum_p gamma[p] s^p.
struct PolyDensityForm {
  JacobiParams params;
  Rational exponent;
  Rational one_minus_power;
  std::vector<Rational> gamma;
};

/// E(s) = norm * s^exponent0 * (P(s) f(s) + Q(s) f'(s)), f = 2F1(hyp; s).
struct HypGapForm {
  JacobiParams params;
  long k = 0;
  Rational exponent0;
  Poly p_poly;
  Poly q_poly;
  HypParams hyp;
  Real log_norm;
  Real norm;
};

/// p(s) = norm * s^exponent (1-s)^one_minus_power * (P f + Q f').
struct HypDensityForm {
  JacobiParams params;
  long k = 0;
  Rational exponent;
  Rational one_minus_power;
  Poly p_poly;
  Poly q_poly;
  HypParams hyp;
  Real log_norm;
  Real norm;
};

/// Edge expansion about s = 1:
///   E(s) = 1 + sum_{q,l} gamma_tilde[q,l] (1-s)^(q(lambda2+1) + q(q-1)beta/2 + l).
struct EdgeSeriesForm {
  JacobiParams params;
  std::map<std::pair<int, long>, Rational> gamma_tilde;

  Rational exponent(int q, long l) const {
    return q * (params.lambda2 + 1) + params.beta * q * (q - 1) / 2 + l;
  }
  /// Upper bound q lambda1 + q (N - q) beta on l.
  long l_max(int q) const;
};

/// Derivative of an edge expansion, i.e. the largest-eigenvalue density.
struct EdgeDensityForm {
  EdgeSeriesForm gap;
};

/// Frobenius solution about x = 1 with leading exponent mu_q; coeff_vectors[l]
/// is the (N+1)-vector multiplying (1-x)^(mu_q + l).
struct FrobeniusSolution {
  int q = 0;
  Rational mu_q;
  std::vector<std::vector<Rational>> coeff_vectors;
};

}  // namespace jacobi_edge
