#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jacobi_edge/rational.hpp"

namespace jacobi_edge {

/// Variable tag. `t` stands for 1 - s; `formal` is an abstract indeterminate
/// (used for a symbolic exponent parameter or a regularizer).
enum class Var { s, t, formal };

std::string to_string(Var v);

/// Dense univariate polynomial with exact rational coefficients, indexed by
/// degree. The trailing coefficient is nonzero unless the polynomial is zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Var var) : var_(var) {}
  Poly(Var var, std::vector<Rational> coeffs);

  static Poly constant(Var var, const Rational& c);
  static Poly monomial(Var var, const Rational& c, int degree);

  Var var() const noexcept { return var_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero outside the stored range).
  Rational operator[](int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.var_ == b.var_ && a.coeffs_ == b.coeffs_; }

  Poly derivative() const;
  /// Multiplies by x^k.
  Poly shifted(int k) const;
  /// p(a x + b).
  Poly compose_linear(const Rational& a, const Rational& b) const;
  Rational eval(const Rational& x) const;
  Rational sum_of_coeffs() const;

  /// Quotient and remainder of Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  Poly monic() const;
  Poly retagged(Var v) const { Poly r = *this; r.var_ = v; return r; }

 private:
  void trim();
  void require_same_var(const Poly& other) const;

  Var var_ = Var::s;
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace jacobi_edge
