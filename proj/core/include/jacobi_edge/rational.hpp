#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace jacobi_edge {

/// Exact scalar: arbitrary-precision rational, always kept in lowest terms
/// with a positive denominator (gmpxx canonicalizes after every operation).
using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms.
inline Rational make_rational(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "p/q", "-p/q" or an integer literal. Decimal or exponent notation is
/// rejected: all pipeline inputs must be exact.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers print as "n/1".
std::string to_canonical_string(const Rational& value);

bool is_integer(const Rational& value);
bool is_nonnegative_integer(const Rational& value);

/// Converts an integral rational to long; throws InvalidParameters otherwise.
long to_long(const Rational& value);

Rational floor_of(const Rational& value);

/// Fractional part in [0, 1).
Rational fractional_part(const Rational& value);

Rational binomial(long n, long k);
Rational factorial(long n);

double to_double(const Rational& value);

/// Approximate log10 of |value|; returns a large negative number for zero.
double log10_abs(const Rational& value);

/// Complex rational a + b i.
struct ComplexRational {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  ComplexRational conj() const { return {re, -im}; }

  ComplexRational& operator+=(const ComplexRational& other) {
    re += other.re;
    im += other.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& other) {
    re -= other.re;
    im -= other.im;
    return *this;
  }
  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator*(const ComplexRational& a, const Rational& s) {
    return {a.re * s, a.im * s};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    Rational den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// i^k for any integer k.
ComplexRational i_power(long k);

}  // namespace jacobi_edge
