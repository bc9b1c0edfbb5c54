#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/real.hpp"

namespace jacobi_edge {

/// ln Gamma(z) for z > 0.
Real ln_gamma(const Real& z);

/// Euler beta in the shifted convention: Gamma(a+1) Gamma(b+1) / Gamma(a+b+2),
/// i.e. the integral of x^a (1-x)^b over [0, 1].
Real beta_value(const Rational& a, const Rational& b);

/// a! / prod_{p=1}^{a+1} (b + p), exact; Field may be symbolic.
template <class Field>
Field beta_value_exact_int(long a, const Field& b) {
  if (a < 0) throw InvalidParameters("beta_value_exact_int needs a >= 0");
  Field den(1);
  for (long p = 1; p <= a + 1; ++p) {
    Field f = b + Field(p);
    if (is_zero(f)) throw InvalidParameters("beta_value_exact_int: pole at b = -" + std::to_string(p));
    den *= f;
  }
  return Field(factorial(a)) / den;
}

/// Gamma-function monomial prod Gamma(arg)^power.
using GammaProduct = std::vector<std::pair<Rational, int>>;

/// Appends the Gamma factors of the Selberg integral J_{n, l1, l2, beta}
/// raised to `power` (+1 numerator, -1 denominator).
void append_selberg_factors(GammaProduct& prod, const Rational& l1, const Rational& l2, const Rational& beta, long n,
                            int power);

/// Exact value when all Gamma factors telescope to a rational (including
/// balanced powers of sqrt(pi)); nullopt otherwise.
std::optional<Rational> gamma_product_exact(const GammaProduct& prod);

/// ln |value| of a Gamma monomial, all arguments positive.
Real gamma_product_log(const GammaProduct& prod);

/// ln J_{n, l1, l2, beta}.
Real selberg_log(const Rational& l1, const Rational& l2, const Rational& beta, long n);

/// J_{n, l1, 0, beta} / J_{n, l1, l2, beta} for non-negative integer l2.
Rational selberg_ratio_exact(const Rational& l1, long l2, const Rational& beta, long n);

struct HypParams {
  Rational a;
  Rational b;
  Rational c;
  friend bool operator==(const HypParams&, const HypParams&) = default;
};

/// Gauss 2F1(a, b; c; s) for 0 <= s < 1.
Real gauss_2f1(const HypParams& hp, const Real& s);

/// d/ds 2F1(a, b; c; s) = (ab/c) 2F1(a+1, b+1; c+1; s).
Real gauss_2f1_deriv(const HypParams& hp, const Real& s);

/// Number of series terms summed by the most recent gauss_2f1 call on this
/// thread (diagnostic).
long gauss_2f1_last_terms();

}  // namespace jacobi_edge
