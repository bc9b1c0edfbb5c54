#include "jacobi_edge/real.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>

#include "jacobi_edge/errors.hpp"

namespace jacobi_edge {

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

double to_double(const Real& x) { return x.convert_to<double>(); }

Real real_pi() { return boost::math::constants::pi<Real>(); }

std::string format_real(const Real& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

Real eval_poly(const Poly& p, const Real& x, Real* scale) {
  Real acc = 0;
  Real mag = 0;
  const Real ax = abs(x);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const Real c = to_real(*it);
    acc = acc * x + c;
    if (scale) mag = mag * ax + abs(c);
  }
  if (scale) *scale = mag;
  return acc;
}

Real pow_rational(const Real& x, const Rational& e) {
  if (x < 0) throw InvalidParameters("negative base in real power");
  if (sgn(e) == 0) return Real(1);
  if (x == 0) {
    if (sgn(e) < 0) throw NumericFailure("zero raised to a negative power");
    return Real(0);
  }
  if (is_integer(e) && e.get_num().fits_slong_p()) return pow(x, e.get_num().get_si());
  return pow(x, to_real(e));
}

Real series_eval(const RationalSeries& g, const Real& x) {
  if (x < 0 || x > 1) throw InvalidParameters("series_eval requires 0 <= x <= 1");
  const Real base = 1 - x;
  Real sum = 0;
  for (const auto& [k, c] : g.terms()) {
    const Rational e = g.exponent(k);
    sum += to_real(c) * pow_rational(base, e);
  }
  return sum;
}

}  // namespace jacobi_edge
