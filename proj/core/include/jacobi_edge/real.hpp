#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

#include "jacobi_edge/lambda_series.hpp"
#include "jacobi_edge/poly.hpp"
#include "jacobi_edge/rational.hpp"

namespace jacobi_edge {

/// High-precision real with a compile-time precision, so values are safe to
/// share between threads. 320 decimal digits leave headroom for the
/// cancellation in large alternating polynomials evaluated near s = 1.
inline constexpr unsigned real_digits10 = 320;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<real_digits10>,
                                           boost::multiprecision::et_off>;

Real to_real(const Rational& q);
double to_double(const Real& x);
Real real_pi();

/// Shortest round-trip decimal for a double, or `digits` significant digits.
std::string format_real(const Real& x, int digits = 17);

/// Horner evaluation; also returns the magnitude sum |c_k| |x|^k in `scale`
/// when non-null (for cancellation diagnostics).
Real eval_poly(const Poly& p, const Real& x, Real* scale = nullptr);

/// Numeric value of sum c (1 - x)^(q lambda2 + l) for 0 <= x <= 1.
Real series_eval(const RationalSeries& g, const Real& x);

/// x^e for x >= 0 with exact rational exponent (0^0 = 1).
Real pow_rational(const Real& x, const Rational& e);

}  // namespace jacobi_edge
