#include "jacobi_edge/serialize.hpp"

#include <iomanip>

namespace jacobi_edge {

namespace {

Json coeff_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(serialize(x));
  return a;
}

Json complex_json(const ComplexRational& c) { return Json{{"re", serialize(c.re)}, {"im", serialize(c.im)}}; }

}  // namespace

Json serialize(const Rational& x) { return to_canonical_string(x); }

Json serialize(const Real& x) { return format_real(x, 40); }

Json serialize(const Poly& p) { return Json{{"var", to_string(p.var())}, {"coeffs", coeff_array(p.coeffs())}}; }

Json serialize(const RationalSeries& g) {
  Json terms = Json::array();
  for (const auto& [k, c] : g.terms()) terms.push_back(Json{{"q", k.q}, {"l", k.l}, {"coeff", serialize(c)}});
  return Json{{"lambda2", serialize(g.lambda2())}, {"terms", terms}};
}

Json serialize(const MuLaurent& m) {
  Json terms = Json::array();
  for (const auto& [k, c] : m.terms()) terms.push_back(Json{{"power", k}, {"coeff", complex_json(c)}});
  return terms;
}

Json serialize(const JacobiParams& p) {
  return Json{{"lambda1", serialize(p.lambda1)}, {"lambda2", serialize(p.lambda2)}, {"beta", serialize(p.beta)}, {"n", p.n}};
}

Json serialize(const HypParams& h) {
  return Json{{"a", serialize(h.a)}, {"b", serialize(h.b)}, {"c", serialize(h.c)}};
}

Json serialize(const PolyGapForm& f) {
  return Json{{"type", "poly_gap"},
              {"params", serialize(f.params)},
              {"exponent0", serialize(f.exponent0)},
              {"gamma", coeff_array(f.gamma)}};
}

Json serialize(const PolyDensityForm& f) {
  return Json{{"type", "poly_density"},
              {"params", serialize(f.params)},
              {"exponent", serialize(f.exponent)},
              {"one_minus_power", serialize(f.one_minus_power)},
              {"gamma", coeff_array(f.gamma)}};
}

Json serialize(const HypGapForm& f) {
  return Json{{"type", "hyp_gap"},
              {"params", serialize(f.params)},
              {"k", f.k},
              {"exponent0", serialize(f.exponent0)},
              {"p", coeff_array(f.p_poly.coeffs())},
              {"q", coeff_array(f.q_poly.coeffs())},
              {"hyp", serialize(f.hyp)},
              {"log_norm", serialize(f.log_norm)},
              {"norm", serialize(f.norm)}};
}

Json serialize(const HypDensityForm& f) {
  return Json{{"type", "hyp_density"},
              {"params", serialize(f.params)},
              {"k", f.k},
              {"exponent", serialize(f.exponent)},
              {"one_minus_power", serialize(f.one_minus_power)},
              {"p", coeff_array(f.p_poly.coeffs())},
              {"q", coeff_array(f.q_poly.coeffs())},
              {"hyp", serialize(f.hyp)},
              {"log_norm", serialize(f.log_norm)},
              {"norm", serialize(f.norm)}};
}

Json serialize(const EdgeSeriesForm& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.gamma_tilde) {
    terms.push_back(Json{{"q", key.first}, {"l", key.second}, {"coeff", serialize(c)},
                         {"exponent", serialize(f.exponent(key.first, key.second))}});
  }
  return Json{{"type", "edge_series"}, {"params", serialize(f.params)}, {"gamma_tilde", terms}};
}

Json serialize(const EdgeDensityForm& f) {
  Json j = serialize(f.gap);
  j["type"] = "edge_series_density";
  return j;
}

Json serialize(const GapForm& f) {
  return std::visit([](const auto& x) { return serialize(x); }, f);
}

Json serialize(const DensityForm& f) {
  return std::visit([](const auto& x) { return serialize(x); }, f);
}

Json serialize(const TrigGapForm& f) {
  Json terms = Json::array();
  for (const auto& [key, c] : f.terms) {
    terms.push_back(Json{{"m", serialize(key.first)}, {"d", key.second}, {"re", serialize(c.re)}, {"im", serialize(c.im)}});
  }
  return Json{{"type", "circular_gap"},
              {"n", f.n},
              {"beta", f.beta},
              {"variable", "psi = 2 pi - phi"},
              {"normalization", Json{{"pi_power", f.pi_power}}},
              {"terms", terms}};
}

Json serialize(const CheckResult& r) {
  return Json{{"test", r.test}, {"statistic", r.statistic}, {"threshold", r.threshold}, {"pass", r.pass}};
}

void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& rows, const char* first_column) {
  out << first_column << ",value\n";
  out << std::setprecision(17);
  for (const auto& [x, v] : rows) out << x << ',' << v << '\n';
}

}  // namespace jacobi_edge
