#pragma once

#include <map>

#include "jacobi_edge/rational.hpp"

namespace jacobi_edge {

/// Laurent polynomial in a formal regularizer mu with complex-rational
/// coefficients.
class MuLaurent {
 public:
  MuLaurent() = default;
  static MuLaurent monomial(int power, const ComplexRational& c);

  const std::map<int, ComplexRational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of mu^k.
  ComplexRational coefficient(int k) const;
  /// Largest negative power present (0 when none).
  int pole_order() const;

  void add(int power, const ComplexRational& c);
  MuLaurent& operator+=(const MuLaurent& o);
  MuLaurent& operator-=(const MuLaurent& o);
  friend MuLaurent operator+(MuLaurent a, const MuLaurent& b) { return a += b; }
  friend MuLaurent operator-(MuLaurent a, const MuLaurent& b) { return a -= b; }
  friend MuLaurent operator*(const MuLaurent& a, const MuLaurent& b);
  friend MuLaurent operator*(const MuLaurent& a, const ComplexRational& c);
  friend bool operator==(const MuLaurent& a, const MuLaurent& b) { return a.terms_ == b.terms_; }

  /// Drops every power above max_power.
  MuLaurent truncated(int max_power) const;

 private:
  std::map<int, ComplexRational> terms_;
};

}  // namespace jacobi_edge
