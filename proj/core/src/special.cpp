#include "jacobi_edge/special.hpp"

#include <cmath>
#include <map>

namespace jacobi_edge {

namespace {

constexpr long max_series_terms = 1'000'000;

thread_local long last_terms = 0;

const Real& series_tolerance() {
  static const Real tol("1e-200");
  return tol;
}

const Real& perturbation() {
  static const Real eps("1e-60");
  return eps;
}

bool is_nonpositive_integer(const Real& x) { return x <= 0 && x == floor(x); }

Real recip_gamma(const Real& x) {
  if (is_nonpositive_integer(x)) return Real(0);
  return 1 / tgamma(x);
}

// Plain Taylor summation about 0.
Real direct_series(const Real& a, const Real& b, const Real& c, const Real& s) {
  Real term = 1;
  Real sum = 1;
  for (long k = 0; k < max_series_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * s;
    sum += term;
    last_terms = k + 1;
    if (term == 0) return sum;
    const Real ratio = abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2)) * s);
    if (ratio < 1 && abs(term) <= series_tolerance() * abs(sum) * (1 - ratio)) return sum;
  }
  throw NumericFailure("gauss_2f1: series did not converge within the term cap (s = " + format_real(s) + ")");
}

// Connection formula to argument 1 - s; requires c - a - b non-integer.
Real transformed(const Real& a, const Real& b, const Real& c, const Real& s) {
  const Real t = 1 - s;
  const Real d = c - a - b;
  const Real g1 = tgamma(c) * tgamma(d) * recip_gamma(c - a) * recip_gamma(c - b);
  const Real g2 = tgamma(c) * tgamma(-d) * recip_gamma(a) * recip_gamma(b);
  Real out = 0;
  if (g1 != 0) out += g1 * direct_series(a, b, 1 - d, t);
  if (g2 != 0) out += g2 * pow(t, d) * direct_series(c - a, c - b, d + 1, t);
  return out;
}

Real terminating(const Real& a, const Real& b, const Real& c, const Real& s) {
  // One of a, b is a non-positive integer: finite sum.
  const Real n = is_nonpositive_integer(a) ? -a : -b;
  Real term = 1;
  Real sum = 1;
  for (long k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * s;
    sum += term;
  }
  last_terms = n.convert_to<long>();
  return sum;
}

// Branch selection uses the exact parameters: c - a - b computed in binary
// floating point would miss integer values such as 23/3 - 4 - 11/3.
Real evaluate(const Rational& qa, const Rational& qb, const Rational& qc, const Real& s) {
  if (is_integer(qc) && sgn(qc) <= 0) throw InvalidParameters("gauss_2f1: c is zero or a negative integer");
  if (s < 0 || s >= 1) throw InvalidParameters("gauss_2f1 requires 0 <= s < 1");
  const Real a = to_real(qa);
  const Real b = to_real(qb);
  const Real c = to_real(qc);
  if (s == 0) return Real(1);
  if ((is_integer(qa) && sgn(qa) <= 0) || (is_integer(qb) && sgn(qb) <= 0)) return terminating(a, b, c, s);
  if (s <= Real(1) / 2) return direct_series(a, b, c, s);
  if (!is_integer(qc - qa - qb)) return transformed(a, b, c, s);
  if (s <= Real(9) / 10) return direct_series(a, b, c, s);
  // Integer c - a - b: symmetric perturbation of a, error O(eps^2).
  const Real& eps = perturbation();
  return (transformed(a + eps, b, c, s) + transformed(a - eps, b, c, s)) / 2;
}

}  // namespace

Real ln_gamma(const Real& z) {
  if (z <= 0) throw InvalidParameters("ln_gamma requires z > 0");
  return lgamma(z);
}

Real beta_value(const Rational& a, const Rational& b) {
  if (a <= -1 || b <= -1) throw InvalidParameters("beta_value requires a > -1 and b > -1");
  return exp(ln_gamma(to_real(a + 1)) + ln_gamma(to_real(b + 1)) - ln_gamma(to_real(a + b + 2)));
}

void append_selberg_factors(GammaProduct& prod, const Rational& l1, const Rational& l2, const Rational& beta, long n,
                            int power) {
  const Rational h = beta / 2;
  for (long j = 0; j < n; ++j) {
    prod.emplace_back(l1 + 1 + j * h, power);
    prod.emplace_back(l2 + 1 + j * h, power);
    prod.emplace_back(1 + (j + 1) * h, power);
    prod.emplace_back(l1 + l2 + 2 + (n + j - 1) * h, -power);
    prod.emplace_back(1 + h, -power);
  }
}

std::optional<Rational> gamma_product_exact(const GammaProduct& prod) {
  // Group by fractional class; within a class every Gamma is the class base
  // Gamma(f) times a rational Pochhammer factor.
  std::map<Rational, int> net;
  Rational value = 1;
  for (const auto& [arg, power] : prod) {
    if (power == 0) continue;
    if (is_integer(arg) && sgn(arg) <= 0) throw InvalidParameters("Gamma pole at " + to_canonical_string(arg));
    const Rational f = fractional_part(arg);
    const Rational base = is_integer(arg) ? Rational(1) : f;
    net[base] += power;
    Rational poch = 1;
    const long steps = to_long(arg - base);
    if (steps >= 0) {
      for (long i = 0; i < steps; ++i) poch *= base + i;
    } else {
      for (long i = 1; i <= -steps; ++i) poch /= base - i;
    }
    for (int p = 0; p < std::abs(power); ++p) {
      if (power > 0) {
        value *= poch;
      } else {
        value /= poch;
      }
    }
  }
  for (const auto& [base, count] : net) {
    if (base == 1) continue;  // Gamma(1) = 1
    if (count != 0) return std::nullopt;
  }
  return value;
}

Real gamma_product_log(const GammaProduct& prod) {
  Real acc = 0;
  for (const auto& [arg, power] : prod) {
    if (power == 0) continue;
    if (sgn(arg) <= 0) throw InvalidParameters("gamma_product_log needs positive arguments");
    acc += power * ln_gamma(to_real(arg));
  }
  return acc;
}

Real selberg_log(const Rational& l1, const Rational& l2, const Rational& beta, long n) {
  if (l1 <= -1 || l2 <= -1 || sgn(beta) <= 0 || n < 0) {
    throw InvalidParameters("selberg_log requires lambda1 > -1, lambda2 > -1, beta > 0");
  }
  GammaProduct prod;
  append_selberg_factors(prod, l1, l2, beta, n, 1);
  return gamma_product_log(prod);
}

Rational selberg_ratio_exact(const Rational& l1, long l2, const Rational& beta, long n) {
  if (l2 < 0) throw InvalidParameters("selberg_ratio_exact needs a non-negative integer lambda2");
  const Rational h = beta / 2;
  Rational r = 1;
  for (long j = 0; j < n; ++j) {
    for (long m = 1; m <= l2; ++m) {
      const Rational num = l1 + l2 + 2 + (n + j - 1) * h - m;
      const Rational den = 1 + j * h + l2 - m;
      if (sgn(den) == 0 || sgn(num) == 0) throw InvalidParameters("selberg_ratio_exact: vanishing factor");
      r *= num / den;
    }
  }
  return r;
}

Real gauss_2f1(const HypParams& hp, const Real& s) {
  return evaluate(hp.a, hp.b, hp.c, s);
}

Real gauss_2f1_deriv(const HypParams& hp, const Real& s) {
  if (sgn(hp.a) == 0 || sgn(hp.b) == 0) return Real(0);
  return to_real(hp.a * hp.b / hp.c) * evaluate(hp.a + 1, hp.b + 1, hp.c + 1, s);
}

long gauss_2f1_last_terms() { return last_terms; }

}  // namespace jacobi_edge
