#include "jacobi_edge/rational_function.hpp"

#include "jacobi_edge/errors.hpp"

namespace jacobi_edge {

namespace {

int valuation(const Poly& p) {
  int v = 0;
  while (v <= p.degree() && sgn(p.coeffs()[static_cast<std::size_t>(v)]) == 0) ++v;
  return v;
}

Poly drop_low(const Poly& p, int v) {
  return Poly(p.var(), std::vector<Rational>(p.coeffs().begin() + v, p.coeffs().end()));
}

}  // namespace

RationalFunction::RationalFunction(Poly num, Poly den) : num_(num.retagged(Var::formal)), den_(den.retagged(Var::formal)) {
  if (den_.is_zero()) throw NumericFailure("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Poly(Var::formal, {0, 1}), Poly::constant(Var::formal, 1));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(Var::formal, 1);
    return;
  }
  if (den_.degree() > 0) {
    const Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.divmod(g).first;
      den_ = den_.divmod(g).first;
    }
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw NumericFailure("rational function is not constant");
  return num_[0];
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (o.is_constant()) {
    num_ *= o.num_[0];
    normalize();
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw NumericFailure("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::compose_linear(const Rational& a, const Rational& b) const {
  return RationalFunction(num_.compose_linear(a, b), den_.compose_linear(a, b));
}

Rational RationalFunction::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (sgn(d) == 0) throw NumericFailure("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

int RationalFunction::pole_order() const {
  if (is_zero()) return 0;
  const int v = valuation(den_) - valuation(num_);
  return v > 0 ? v : 0;
}

std::map<int, Rational> RationalFunction::laurent(int max_power) const {
  std::map<int, Rational> out;
  if (is_zero()) return out;
  const int vn = valuation(num_);
  const int vd = valuation(den_);
  const int low = vn - vd;
  if (max_power < low) return out;
  const Poly n = drop_low(num_, vn);
  const Poly d = drop_low(den_, vd);
  // Power series of n/d with d(0) != 0, by the usual triangular recursion.
  const int count = max_power - low + 1;
  std::vector<Rational> series(static_cast<std::size_t>(count));
  const Rational inv_d0 = 1 / d[0];
  for (int k = 0; k < count; ++k) {
    Rational acc = n[k];
    for (int j = 1; j <= std::min(k, d.degree()); ++j) acc -= d.coeffs()[static_cast<std::size_t>(j)] * series[static_cast<std::size_t>(k - j)];
    series[static_cast<std::size_t>(k)] = acc * inv_d0;
    if (sgn(series[static_cast<std::size_t>(k)]) != 0) out.emplace(low + k, series[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace jacobi_edge
