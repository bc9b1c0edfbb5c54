#include "jacobi_edge/circular.hpp"

#include <string>

#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/nested.hpp"
#include "jacobi_edge/recurrence.hpp"

namespace jacobi_edge {

namespace {

std::string describe(const MuKey& k) { return "(j=" + std::to_string(k.j) + ", m=" + to_canonical_string(k.m) + ")"; }

// Integration against e^{i theta mu~}: x^nu -> (x^{nu + mu~} - 1) / (i (nu + mu~)).
MuSeries integrate_twisted(const MuSeries& h, const Rational& shift) {
  MuSeries out;
  out.set_phase_power(h.phase_power() - 1);
  for (const auto& [k, c] : h.terms()) {
    MuSeries seed = circ_seed(k.j + 1, k.m - shift);
    out.add_scaled(seed, c);
  }
  return out;
}

}  // namespace

MuSeries MuSeries::constant(const RationalFunction& c) {
  MuSeries r;
  r.add({0, 0}, c);
  return r;
}

int MuSeries::pole_order() const {
  int p = 0;
  for (const auto& [k, c] : terms_) p = std::max(p, c.pole_order());
  return p;
}

void MuSeries::add(const MuKey& k, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MuSeries::add_scaled(const MuSeries& g, const RationalFunction& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : g.terms_) add(k, v * c);
}

void MuSeries::add_mul_x(const MuSeries& g, const RationalFunction& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : g.terms_) add({k.j, k.m + 1}, v * c);
}

void MuSeries::add_euler(const MuSeries& g, const RationalFunction& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : g.terms_) {
    const RationalFunction t = v * c * mu_exponent(k);
    if (t.is_zero()) continue;
    add({k.j, k.m + 1}, t);
    add(k, -t);
  }
}

void MuSeries::add_mul_x_xm1(const MuSeries& g, const RationalFunction& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : g.terms_) {
    const RationalFunction t = v * c;
    add({k.j, k.m + 2}, t);
    add({k.j, k.m + 1}, -t);
  }
}

void MuSeries::scale(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return;
  }
  for (auto& [k, v] : terms_) v *= c;
}

MuSeries MuSeries::empty_like() const {
  MuSeries r;
  r.phase_power_ = phase_power_;
  return r;
}

RationalFunction mu_exponent(const MuKey& k) {
  return RationalFunction(Poly(Var::formal, {k.m, Rational(k.j)}), Poly::constant(Var::formal, 1));
}

MuSeries circ_seed(int j, const Rational& m) {
  if (j == 0 && sgn(m) == 0) throw InvalidParameters("circ_seed: nu = 0 is not a twisted exponent");
  const RationalFunction inv = RationalFunction(1) / mu_exponent({j, m});
  MuSeries out;
  out.set_phase_power(-1);
  out.add({j, m}, inv);
  out.add({0, 0}, -inv);
  return out;
}

TrigGapForm mu_limit(const MuSeries& series, long n, long beta) {
  // Coefficient of mu^t psi^d e^{i psi m}: sum over Laurent terms r_u mu^u
  // times (i j psi mu)^d / d! with u + d = t.
  std::map<std::pair<Rational, int>, MuLaurent> acc;
  const ComplexRational phase = i_power(series.phase_power());
  for (const auto& [k, c] : series.terms()) {
    for (const auto& [u, r] : c.laurent(0)) {
      Rational jd = 1;
      for (int d = 0; u + d <= 0; ++d) {
        if (d > 0) jd *= Rational(k.j) / d;
        if (d > 0 && k.j == 0) break;
        const ComplexRational v = i_power(d) * phase * (r * jd);
        acc[{k.m, d}].add(u + d, v);
      }
    }
  }

  TrigGapForm form;
  form.n = n;
  form.beta = beta;
  std::map<std::pair<Rational, int>, ComplexRational> raw;
  for (const auto& [key, laurent] : acc) {
    if (laurent.pole_order() > 0) {
      throw VerificationFailure("circular: residual pole of order " + std::to_string(laurent.pole_order()) +
                                " in mu at frequency " + to_canonical_string(key.first) + ", psi power " +
                                std::to_string(key.second));
    }
    const ComplexRational c0 = laurent.coefficient(0);
    if (!c0.is_zero()) raw.emplace(key, c0);
  }

  // Value at psi = 2 pi: e^{2 pi i m} = +-1 for half-integer m, psi^d = 2^d pi^d.
  std::map<int, ComplexRational> at_full;
  for (const auto& [key, c] : raw) {
    const Rational twice = key.first * 2;
    if (!is_integer(twice)) throw VerificationFailure("circular: frequency " + to_canonical_string(key.first) + " is not a half-integer");
    const long sign = (to_long(twice) % 2 == 0) ? 1 : -1;
    Rational factor = sign;
    for (int d = 0; d < key.second; ++d) factor *= 2;
    at_full[key.second] += c * factor;
  }
  std::erase_if(at_full, [](const auto& kv) { return kv.second.is_zero(); });
  if (at_full.size() != 1) {
    throw VerificationFailure("circular: normalization at phi = 0 is not a single power of pi");
  }
  form.pi_power = at_full.begin()->first;
  const ComplexRational norm = at_full.begin()->second;
  for (const auto& [key, c] : raw) form.terms.emplace(key, c / norm);

  ComplexRational at_zero;
  for (const auto& [key, c] : form.terms) {
    if (key.second == 0) at_zero += c;
    auto it = form.terms.find({-key.first, key.second});
    if (it == form.terms.end() || !(it->second == c.conj())) {
      throw VerificationFailure("circular: coefficients are not conjugate-symmetric at frequency " +
                                to_canonical_string(key.first));
    }
  }
  if (!at_zero.is_zero()) throw VerificationFailure("circular: value at phi = 2 pi is not zero");
  return form;
}

TrigGapForm circ_gap_integer_beta(long n, long beta) {
  if (n < 1 || beta < 1) throw InvalidParameters("circular: need N >= 1 and a positive integer beta");
  const Rational shift = make_rational(beta * (n - 1), 2);
  const RationalFunction mu = RationalFunction::variable();
  const RationalFunction lambda1 = mu - RationalFunction(shift) - RationalFunction(1);
  const RationalFunction zero(0);
  const RationalFunction rbeta(beta);

  MuSeries k_level = integrate_twisted(MuSeries::constant(1), shift);
  for (long level = 1; level < n; ++level) {
    MuSeries j = std::move(k_level);
    for (long a = 0; a < beta; ++a) j = sweep_generic(j, level, lambda1, zero, rbeta, RationalFunction(a));
    k_level = integrate_twisted(j, shift);
  }
  return mu_limit(k_level, n, beta);
}

TrigGapForm circ_gap_even_beta(long n, long beta) {
  if (beta < 2 || beta % 2 != 0) throw InvalidParameters("circ_gap_even_beta requires an even beta; use the direct scheme");
  if (n < 1) throw InvalidParameters("circular: need N >= 1");
  const SymbolicSeries edge = nested_gap_integral<RationalFunction>(n, 0, RationalFunction::variable(), beta);

  // lambda2 = mu - beta (N-1)/2 - 1 and (1-s) -> e^{i psi}.
  const Rational shift = make_rational(beta * (n - 1), 2);
  MuSeries mapped;
  for (const auto& [key, c] : edge.terms()) {
    const MuKey target{key.q, Rational(key.l) - key.q - key.q * shift};
    mapped.add(target, c.compose_linear(1, -shift - 1));
  }
  return mu_limit(mapped, n, beta);
}

Real evaluate(const TrigGapForm& form, const Real& phi, Real* imag) {
  const Real two_pi = 2 * real_pi();
  if (phi < 0 || phi > two_pi) throw InvalidParameters("circular: phi must lie in [0, 2 pi]");
  const Real psi = two_pi - phi;
  Real re = 0;
  Real im = 0;
  for (const auto& [key, c] : form.terms) {
    const Real angle = psi * to_real(key.first);
    const Real mag = pow(psi, key.second);
    const Real cr = to_real(c.re);
    const Real ci = to_real(c.im);
    re += mag * (cr * cos(angle) - ci * sin(angle));
    im += mag * (cr * sin(angle) + ci * cos(angle));
  }
  const Real scale = pow(real_pi(), form.pi_power);
  if (imag) *imag = im / scale;
  return re / scale;
}

void check_trig_form(const TrigGapForm& form, int points) {
  const Real two_pi = 2 * real_pi();
  if (abs(evaluate(form, Real(0)) - 1) > Real("1e-100")) throw VerificationFailure("circular: E(0) != 1");
  if (abs(evaluate(form, two_pi)) > Real("1e-100")) throw VerificationFailure("circular: E(2 pi) != 0");
  Real prev = 2;
  for (int i = 0; i < points; ++i) {
    const Real phi = two_pi * i / (points - 1);
    Real im;
    const Real v = evaluate(form, phi, &im);
    if (abs(im) > Real("1e-100")) throw VerificationFailure("circular: non-real value");
    if (v > prev + Real("1e-30")) throw VerificationFailure("circular: E increases at phi = " + format_real(phi));
    prev = v;
  }
}

}  // namespace jacobi_edge
