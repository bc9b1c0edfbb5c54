#pragma once

#include <map>
#include <utility>

#include "jacobi_edge/mu_laurent.hpp"
#include "jacobi_edge/rational_function.hpp"
#include "jacobi_edge/real.hpp"

namespace jacobi_edge {

/// Key of the basis function x^(j mu + m), x = e^{i psi}. The Fourier index m
/// is rational: half-integers occur for odd beta.
struct MuKey {
  int j = 0;
  Rational m;
  friend bool operator<(const MuKey& a, const MuKey& b) { return a.j != b.j ? a.j < b.j : a.m < b.m; }
  friend bool operator==(const MuKey& a, const MuKey& b) { return a.j == b.j && a.m == b.m; }
};

/// i^phase_power * sum c(mu) x^(j mu + m), with c a rational function of the
/// regularizer mu kept unexpanded until the mu -> 0 limit.
class MuSeries {
 public:
  using Terms = std::map<MuKey, RationalFunction>;

  MuSeries() = default;
  static MuSeries constant(const RationalFunction& c);

  const Terms& terms() const noexcept { return terms_; }
  int phase_power() const noexcept { return phase_power_; }
  void set_phase_power(int p) { phase_power_ = p; }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Largest pole order at mu = 0 among the coefficients.
  int pole_order() const;

  void add(const MuKey& k, const RationalFunction& c);
  void add_scaled(const MuSeries& g, const RationalFunction& c);
  void add_mul_x(const MuSeries& g, const RationalFunction& c);
  /// this += c * x (x - 1) g'(x).
  void add_euler(const MuSeries& g, const RationalFunction& c);
  void add_mul_x_xm1(const MuSeries& g, const RationalFunction& c);
  void scale(const RationalFunction& c);
  MuSeries empty_like() const;

 private:
  Terms terms_;
  int phase_power_ = 0;
};

/// The exponent j mu + m as a rational function of mu.
RationalFunction mu_exponent(const MuKey& k);

/// Antiderivative from 0 to psi of e^{i theta nu}, nu = j mu + m with
/// (j, m) != (0, 0): (1/(i nu)) (x^nu - 1).
MuSeries circ_seed(int j, const Rational& m);

/// E(phi) = pi^(-pi_power) * sum c[m, d] psi^d e^{i psi m}, psi = 2 pi - phi,
/// the gap probability of the arc (0, phi) in the circular beta ensemble.
struct TrigGapForm {
  long n = 1;
  long beta = 2;
  int pi_power = 0;
  std::map<std::pair<Rational, int>, ComplexRational> terms;

  friend bool operator==(const TrigGapForm& a, const TrigGapForm& b) {
    return a.pi_power == b.pi_power && a.terms == b.terms;
  }
};

/// mu -> 0 limit of a series evaluated at x = e^{i psi}, normalized so that
/// the value at phi = 0 (psi = 2 pi) is 1. Checks that every negative power
/// of mu cancels, realness, and the phi = 2 pi zero.
TrigGapForm mu_limit(const MuSeries& series, long n, long beta);

/// Direct mu-regularized recursion for any positive integer beta.
TrigGapForm circ_gap_integer_beta(long n, long beta);

/// Mapping from the edge expansion with symbolic lambda2, beta even.
TrigGapForm circ_gap_even_beta(long n, long beta);

/// Value at phi in [0, 2 pi]; `imag` receives the imaginary residue.
Real evaluate(const TrigGapForm& form, const Real& phi, Real* imag = nullptr);

/// Throws VerificationFailure unless value(0) = 1, value(2 pi) = 0 and the
/// form is non-increasing on an evenly spaced grid.
void check_trig_form(const TrigGapForm& form, int points = 101);

}  // namespace jacobi_edge
