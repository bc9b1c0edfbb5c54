#include "jacobi_edge/poly.hpp"

#include <algorithm>

#include "jacobi_edge/errors.hpp"

namespace jacobi_edge {

std::string to_string(Var v) {
  switch (v) {
    case Var::s: return "s";
    case Var::t: return "t";
    case Var::formal: return "formal";
  }
  return "?";
}

Poly::Poly(Var var, std::vector<Rational> coeffs) : var_(var), coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Var var, const Rational& c) { return Poly(var, {c}); }

Poly Poly::monomial(Var var, const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Poly(var, std::move(v));
}

Rational Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

void Poly::require_same_var(const Poly& other) const {
  if (var_ != other.var_) {
    throw InvalidParameters("polynomial variable mismatch: " + to_string(var_) + " vs " + to_string(other.var_));
  }
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_var(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_var(other);
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  require_same_var(other);
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  Rational tmp;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), coeffs_[i].get_mpq_t(), other.coeffs_[j].get_mpq_t());
      out[i + j] += tmp;
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(var_);
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Poly(var_, std::move(d));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Rational> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(var_, std::move(v));
}

Poly Poly::compose_linear(const Rational& a, const Rational& b) const {
  Poly result(var_);
  const Poly lin(var_, {b, a});
  for (int k = degree(); k >= 0; --k) {
    result *= lin;
    result += constant(var_, coeffs_[static_cast<std::size_t>(k)]);
  }
  return result;
}

Rational Poly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational Poly::sum_of_coeffs() const {
  Rational acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  require_same_var(divisor);
  if (divisor.is_zero()) throw NumericFailure("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {Poly(var_), *this};
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd) + 1);
  const Rational inv_lead = 1 / divisor.leading();
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational f = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
    quo[static_cast<std::size_t>(k)] = f;
    if (sgn(f) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Poly(var_, std::move(quo)), Poly(var_, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = x.divmod(y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

}  // namespace jacobi_edge
