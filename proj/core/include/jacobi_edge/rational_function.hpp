#pragma once

#include <map>

#include "jacobi_edge/poly.hpp"

namespace jacobi_edge {

/// Quotient of polynomials in one formal indeterminate, kept reduced with a
/// monic denominator after every operation.
class RationalFunction {
 public:
  RationalFunction() : num_(Var::formal), den_(Poly::constant(Var::formal, 1)) {}
  RationalFunction(const Rational& c)  // NOLINT(google-explicit-constructor)
      : num_(Poly::constant(Var::formal, c)), den_(Poly::constant(Var::formal, 1)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly num, Poly den);

  /// The indeterminate itself.
  static RationalFunction variable();

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Value when constant; throws otherwise.
  Rational constant_value() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// f(a y + b) as a rational function of y.
  RationalFunction compose_linear(const Rational& a, const Rational& b) const;
  Rational eval(const Rational& x) const;

  /// Laurent coefficients about 0 up to and including x^max_power. Keys start
  /// at the (possibly negative) valuation; zero coefficients are omitted.
  std::map<int, Rational> laurent(int max_power) const;
  /// Order of the pole at 0 (0 when regular there).
  int pole_order() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }

}  // namespace jacobi_edge
