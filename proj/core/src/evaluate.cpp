#include "jacobi_edge/gap_solvers.hpp"

#include <iterator>

namespace jacobi_edge {

namespace {

const Real& cancellation_limit() {
  static const Real lim("1e250");
  return lim;
}

Real clamp_endpoint(const Real& s, double endpoint_eps) {
  if (s < 0 || s > 1) throw InvalidParameters("evaluation point must lie in [0, 1]");
  if (s >= 1) return Real(1) - Real(endpoint_eps);
  return s;
}

// P f + Q f' with a guard against catastrophic cancellation.
Real hyp_combination(const Poly& p, const Poly& q, const HypParams& hyp, const Real& s) {
  Real p_scale;
  Real q_scale;
  const Real pv = eval_poly(p, s, &p_scale);
  const Real qv = eval_poly(q, s, &q_scale);
  const Real f = gauss_2f1(hyp, s);
  const Real fp = q.is_zero() ? Real(0) : gauss_2f1_deriv(hyp, s);
  const Real sum = pv * f + qv * fp;
  const Real mag = p_scale * abs(f) + q_scale * abs(fp);
  if (mag > 0 && mag > cancellation_limit() * abs(sum)) {
    throw NumericFailure("hypergeometric form: cancellation exceeds working precision at s = " + format_real(s));
  }
  return sum;
}

Real poly_from(const std::vector<Rational>& gamma, const Real& s) { return eval_poly(Poly(Var::s, gamma), s); }

// Sum over the edge table of coeff(q, l, c) t^(exponent(q, l) + shift), one
// Horner pass in t per q.
template <class Coeff>
Real edge_sum(const EdgeSeriesForm& form, const Real& t, const Rational& shift, Coeff coeff) {
  Real sum = 0;
  auto it = form.gamma_tilde.begin();
  while (it != form.gamma_tilde.end()) {
    const int q = it->first.first;
    auto end = it;
    while (end != form.gamma_tilde.end() && end->first.first == q) ++end;
    Real inner = 0;
    long power = std::prev(end)->first.second;
    for (auto r = std::make_reverse_iterator(end); r != std::make_reverse_iterator(it); ++r) {
      for (; power > r->first.second; --power) inner *= t;
      inner += coeff(q, r->first.second, r->second);
    }
    for (; power > 0; --power) inner *= t;
    sum += inner * pow_rational(t, form.exponent(q, 0) + shift);
    it = end;
  }
  return sum;
}

}  // namespace

Scheme parse_scheme(const std::string& name) {
  if (name == "auto") return Scheme::automatic;
  if (name == "case1") return Scheme::case1;
  if (name == "case2") return Scheme::case2;
  if (name == "case3-frobenius") return Scheme::case3_frobenius;
  if (name == "case3-nested") return Scheme::case3_nested;
  throw InvalidParameters("unknown scheme '" + name + "'");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::automatic: return "auto";
    case Scheme::case1: return "case1";
    case Scheme::case2: return "case2";
    case Scheme::case3_frobenius: return "case3-frobenius";
    case Scheme::case3_nested: return "case3-nested";
  }
  return "?";
}

Real evaluate(const PolyGapForm& form, const Real& s) {
  if (s < 0 || s > 1) throw InvalidParameters("evaluation point must lie in [0, 1]");
  return pow_rational(s, form.exponent0) * poly_from(form.gamma, s);
}

Real evaluate(const PolyDensityForm& form, const Real& s) {
  if (s < 0 || s > 1) throw InvalidParameters("evaluation point must lie in [0, 1]");
  return pow_rational(s, form.exponent) * pow_rational(1 - s, form.one_minus_power) * poly_from(form.gamma, s);
}

Real evaluate(const HypGapForm& form, const Real& s, double endpoint_eps) {
  const Real x = clamp_endpoint(s, endpoint_eps);
  if (x == 0) return Real(0);
  return form.norm * pow_rational(x, form.exponent0) * hyp_combination(form.p_poly, form.q_poly, form.hyp, x);
}

Real evaluate(const HypDensityForm& form, const Real& s, double endpoint_eps) {
  const Real x = clamp_endpoint(s, endpoint_eps);
  return form.norm * pow_rational(x, form.exponent) * pow_rational(1 - x, form.one_minus_power) *
         hyp_combination(form.p_poly, form.q_poly, form.hyp, x);
}

Real evaluate(const EdgeSeriesForm& form, const Real& s) {
  if (s < 0 || s > 1) throw InvalidParameters("evaluation point must lie in [0, 1]");
  const Real t = 1 - s;
  return 1 + edge_sum(form, t, 0, [](int, long, const Rational& c) { return to_real(c); });
}

Real evaluate(const EdgeDensityForm& form, const Real& s) {
  if (s < 0 || s > 1) throw InvalidParameters("evaluation point must lie in [0, 1]");
  const Real t = 1 - s;
  const auto& gap = form.gap;
  return -edge_sum(gap, t, -1, [&](int q, long l, const Rational& c) { return to_real(c * gap.exponent(q, l)); });
}

Real evaluate(const GapForm& form, const Real& s, double endpoint_eps) {
  return std::visit(
      [&](const auto& f) -> Real {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, HypGapForm>) {
          return evaluate(f, s, endpoint_eps);
        } else {
          return evaluate(f, s);
        }
      },
      form);
}

Real evaluate(const DensityForm& form, const Real& s, double endpoint_eps) {
  return std::visit(
      [&](const auto& f) -> Real {
        if constexpr (std::is_same_v<std::decay_t<decltype(f)>, HypDensityForm>) {
          return evaluate(f, s, endpoint_eps);
        } else {
          return evaluate(f, s);
        }
      },
      form);
}

GapForm solve_gap(const JacobiParams& params, Scheme scheme) {
  params.validate();
  switch (scheme) {
    case Scheme::case1: return gap_case1(params);
    case Scheme::case2: {
      const auto k = params.case2_k();
      if (!k) throw InvalidParameters("case2: " + params.diagnosis());
      return gap_case2(params.lambda1, params.beta, *k, params.n);
    }
    case Scheme::case3_frobenius: return gap_case3_frobenius(params);
    case Scheme::case3_nested: return gap_case3_nested(params);
    case Scheme::automatic: break;
  }
  if (params.admits(CaseKind::case1)) return gap_case1(params);
  if (params.admits(CaseKind::case2)) return solve_gap(params, Scheme::case2);
  if (params.admits(CaseKind::case3)) {
    try {
      return gap_case3_frobenius(params);
    } catch (const NumericFailure&) {
      return gap_case3_nested(params);
    }
  }
  throw InvalidParameters("no admissible case: " + params.diagnosis());
}

DensityForm solve_pmax(const JacobiParams& params, Scheme scheme) {
  params.validate();
  switch (scheme) {
    case Scheme::case1: return pmax_case1(params);
    case Scheme::case2: {
      const auto k = params.case2_k();
      if (!k) throw InvalidParameters("case2: " + params.diagnosis());
      return pmax_case2(params.lambda1, params.beta, *k, params.n);
    }
    case Scheme::case3_frobenius:
    case Scheme::case3_nested: return EdgeDensityForm{std::get<EdgeSeriesForm>(solve_gap(params, scheme))};
    case Scheme::automatic: break;
  }
  if (params.admits(CaseKind::case1)) return pmax_case1(params);
  if (params.admits(CaseKind::case2)) return solve_pmax(params, Scheme::case2);
  if (params.admits(CaseKind::case3)) return EdgeDensityForm{std::get<EdgeSeriesForm>(solve_gap(params))};
  throw InvalidParameters("no admissible case: " + params.diagnosis());
}

DensityForm solve_pmin(const JacobiParams& params, Scheme scheme) {
  try {
    return solve_pmax(params.reflected(), scheme);
  } catch (const InvalidParameters& e) {
    throw InvalidParameters(std::string("pmin needs the reflected parameters (lambda1 <-> lambda2) to be admissible: ") +
                            e.what());
  }
}

Real pmin(const JacobiParams& params, const Real& s) { return evaluate(solve_pmin(params), 1 - s); }

void check_monotone_gap(const GapForm& form, int points, double tol) {
  Real prev = -1;
  for (int i = 0; i < points; ++i) {
    const Real s = Real(i) / (points - 1);
    const Real v = evaluate(form, s);
    if (v < -tol || v > 1 + tol) throw VerificationFailure("gap value outside [0,1] at s = " + format_real(s));
    if (v < prev - tol) throw VerificationFailure("gap form decreases at s = " + format_real(s));
    prev = v;
  }
}

}  // namespace jacobi_edge
