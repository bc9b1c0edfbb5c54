#pragma once

#include <compare>
#include <map>
#include <string>

#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/rational_function.hpp"

namespace jacobi_edge {

/// Formal basis element (1 - x)^(q * lambda2 + l).
struct SeriesKey {
  int q = 0;
  long l = 0;
  auto operator<=>(const SeriesKey&) const = default;
};

enum class AffineFactor { x, x_minus_1, one_minus_x };

/// Finite linear combination of (1 - x)^(q * lambda2 + l) over a coefficient
/// field (Rational, or RationalFunction when lambda2 is symbolic). Keys are
/// never merged on numeric coincidence.
template <class Field>
class LambdaSeries {
 public:
  using Terms = std::map<SeriesKey, Field>;

  LambdaSeries() = default;
  explicit LambdaSeries(Field lambda2) : lambda2_(std::move(lambda2)) {}
  LambdaSeries(Field lambda2, Terms terms) : lambda2_(std::move(lambda2)) {
    for (auto& [k, c] : terms) add(k, c);
  }

  static LambdaSeries constant(Field lambda2, const Field& c) {
    LambdaSeries r(std::move(lambda2));
    r.add({0, 0}, c);
    return r;
  }

  const Field& lambda2() const noexcept { return lambda2_; }
  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Field coefficient(SeriesKey k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Field(0) : it->second;
  }

  /// Exponent q * lambda2 + l of a key.
  Field exponent(SeriesKey k) const { return Field(k.q) * lambda2_ + Field(k.l); }

  void add(SeriesKey k, const Field& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  void add_scaled(const LambdaSeries& g, const Field& c) {
    if (is_zero(c)) return;
    for (const auto& [k, v] : g.terms_) add(k, v * c);
  }

  /// this += c * x * g, using x = 1 - (1 - x).
  void add_mul_x(const LambdaSeries& g, const Field& c) {
    if (is_zero(c)) return;
    for (const auto& [k, v] : g.terms_) {
      Field t = v * c;
      add(k, t);
      add({k.q, k.l + 1}, -t);
    }
  }

  /// this += c * x (x - 1) g'(x).
  void add_euler(const LambdaSeries& g, const Field& c) {
    if (is_zero(c)) return;
    for (const auto& [k, v] : g.terms_) {
      Field t = v * c * exponent(k);
      if (is_zero(t)) continue;
      add(k, t);
      add({k.q, k.l + 1}, -t);
    }
  }

  /// this += c * x (x - 1) g.
  void add_mul_x_xm1(const LambdaSeries& g, const Field& c) {
    if (is_zero(c)) return;
    for (const auto& [k, v] : g.terms_) {
      Field t = v * c;
      add({k.q, k.l + 1}, -t);
      add({k.q, k.l + 2}, t);
    }
  }

  void scale(const Field& c) {
    if (is_zero(c)) {
      terms_.clear();
      return;
    }
    for (auto& [k, v] : terms_) v *= c;
  }

  LambdaSeries empty_like() const { return LambdaSeries(lambda2_); }

  LambdaSeries& operator+=(const LambdaSeries& g) {
    add_scaled(g, Field(1));
    return *this;
  }
  LambdaSeries& operator-=(const LambdaSeries& g) {
    add_scaled(g, Field(-1));
    return *this;
  }
  friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
  friend LambdaSeries operator-(LambdaSeries a, const LambdaSeries& b) { return a -= b; }
  friend bool operator==(const LambdaSeries& a, const LambdaSeries& b) {
    return a.lambda2_ == b.lambda2_ && a.terms_ == b.terms_;
  }

  /// Throws VerificationFailure if some key with q >= 1 carries l < 0.
  void check_exit_invariant() const {
    for (const auto& [k, v] : terms_) {
      if (k.q >= 1 && k.l < 0) {
        throw VerificationFailure("series key (" + std::to_string(k.q) + ", " + std::to_string(k.l) +
                                  ") violates l >= 0; parameters outside the admissible edge-series range");
      }
    }
  }

 private:
  Field lambda2_{};
  Terms terms_;
};

/// d/dx: (q, l) -> (q, l - 1) with coefficient -c (q lambda2 + l).
template <class Field>
LambdaSeries<Field> series_derivative(const LambdaSeries<Field>& g) {
  LambdaSeries<Field> r = g.empty_like();
  for (const auto& [k, v] : g.terms()) r.add({k.q, k.l - 1}, -(v * g.exponent(k)));
  return r;
}

template <class Field>
LambdaSeries<Field> series_mul_affine(const LambdaSeries<Field>& g, AffineFactor which) {
  LambdaSeries<Field> r = g.empty_like();
  switch (which) {
    case AffineFactor::x:
      r.add_mul_x(g, Field(1));
      break;
    case AffineFactor::x_minus_1:
      for (const auto& [k, v] : g.terms()) r.add({k.q, k.l + 1}, -v);
      break;
    case AffineFactor::one_minus_x:
      for (const auto& [k, v] : g.terms()) r.add({k.q, k.l + 1}, v);
      break;
  }
  return r;
}

using RationalSeries = LambdaSeries<Rational>;
using SymbolicSeries = LambdaSeries<RationalFunction>;

}  // namespace jacobi_edge
