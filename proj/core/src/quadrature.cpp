#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/special.hpp"
#include "jacobi_edge/verification.hpp"

namespace jacobi_edge {

namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;
constexpr int max_depth = 24;
constexpr int grading = 4;

// Sigmoidal map of [0, 1] onto itself with vanishing derivatives of order
// grading - 1 at both ends, absorbing algebraic endpoint singularities.
// Returns t and stores 1 - t in `rest` without cancellation.
double sigmoid(double u, double* jac, double* rest) {
  const double a = std::pow(u, grading);
  const double b = std::pow(1 - u, grading);
  const double den = a + b;
  *jac = grading * std::pow(u, grading - 1) * std::pow(1 - u, grading - 1) / (den * den);
  *rest = b / den;
  return a / den;
}

template <class F>
double gauss_panel(const F& g, double a, double b) {
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) {
      sum += w[i] * g(mid);
    } else {
      sum += w[i] * (g(mid - half * x[i]) + g(mid + half * x[i]));
    }
  }
  return sum * half;
}

struct State {
  bool converged = true;
  long panels = 0;
};

constexpr long panel_budget = 50'000'000;

template <class F>
double adaptive(const F& g, double a, double b, double whole, double abs_tol, int depth, State& st) {
  const double m = 0.5 * (a + b);
  const double left = gauss_panel(g, a, m);
  const double right = gauss_panel(g, m, b);
  st.panels += 2;
  const double refined = left + right;
  if (std::fabs(refined - whole) <= std::max(abs_tol, 1e-15 * (std::fabs(left) + std::fabs(right)))) return refined;
  if (depth >= max_depth || st.panels > panel_budget) {
    st.converged = false;
    return refined;
  }
  return adaptive(g, a, m, left, abs_tol, depth + 1, st) + adaptive(g, m, b, right, abs_tol, depth + 1, st);
}

// Integral over [lo, hi] in the sigmoid variable; f receives the point and
// its distance below hi. A non-positive abs_tol requests a single panel.
template <class F>
double integrate_mapped(const F& f, double lo, double hi, double abs_tol, State& st) {
  if (hi <= lo) return 0;
  const double width = hi - lo;
  auto g = [&](double u) {
    double jac = 0;
    double rest = 0;
    const double t = sigmoid(u, &jac, &rest);
    if (jac == 0) return 0.0;
    const double below = width * rest;
    const double x = t < 0.5 ? lo + width * t : hi - below;
    // Points that round onto a singular endpoint carry negligible weight.
    const double v = f(x, below) * jac * width;
    return std::isfinite(v) ? v : 0.0;
  };
  const double whole = gauss_panel(g, 0.0, 1.0);
  ++st.panels;
  if (abs_tol <= 0) return whole;
  return adaptive(g, 0.0, 1.0, whole, abs_tol, 0, st);
}

// Inner levels get the absolute target divided by the largest sigmoid
// Jacobian times the outer width, with a further margin of 16. gap[i] is upper - x[i], carried
// exactly so that factors like (1 - x)^lambda keep full relative accuracy.
double ordered_level(int level, int dim, double lower, double upper, double gap_upper, OrderedPoint& pt,
                     const OrderedIntegrand& f, double abs_tol, State& st) {
  const double inner_tol = abs_tol / (16 * grading * std::max(upper - lower, 1e-300));
  auto inner = [&](double v, double below) {
    const auto i = static_cast<std::size_t>(level);
    pt.x[i] = v;
    pt.gap[i] = gap_upper + below;
    if (level + 1 == dim) return f(pt);
    return ordered_level(level + 1, dim, lower, v, pt.gap[i], pt, f, abs_tol <= 0 ? abs_tol : inner_tol, st);
  };
  return integrate_mapped(inner, lower, upper, abs_tol, st);
}

}  // namespace

double integrate_ordered(int dim, double lower, double upper, const OrderedIntegrand& f, double rel_tol) {
  if (dim < 1) throw InvalidParameters("integrate_ordered needs dim >= 1");
  OrderedPoint pt{std::vector<double>(static_cast<std::size_t>(dim)), std::vector<double>(static_cast<std::size_t>(dim))};
  State st;
  const double estimate = ordered_level(0, dim, lower, upper, 0, pt, f, 0, st);
  const double v = ordered_level(0, dim, lower, upper, 0, pt, f, rel_tol * std::max(std::fabs(estimate), 1e-300), st);
  if (!st.converged) {
    throw NumericFailure("quadrature did not reach relative tolerance " + std::to_string(rel_tol) +
                         " within the subdivision limit");
  }
  return v;
}

double integrate_ordered(int dim, double lower, double upper, const std::function<double(const std::vector<double>&)>& f,
                         double rel_tol) {
  return integrate_ordered(dim, lower, upper, OrderedIntegrand([&](const OrderedPoint& p) { return f(p.x); }), rel_tol);
}

double quadrature_gap(const JacobiParams& params, double s, double rel_tol) {
  params.validate();
  if (params.n > 3) throw InvalidParameters("quadrature oracle is limited to N <= 3");
  if (s < 0 || s > 1) throw InvalidParameters("quadrature_gap needs 0 <= s <= 1");
  if (s == 0) return 0;
  const double l1 = params.lambda1.get_d();
  const double l2 = params.lambda2.get_d();
  const double beta = params.beta.get_d();
  const double tail = 1 - s;
  auto integrand = [&](const OrderedPoint& p) {
    double v = 1;
    for (std::size_t i = 0; i < p.x.size(); ++i) {
      v *= std::pow(p.x[i], l1) * std::pow(tail + p.gap[i], l2);
      for (std::size_t j = 0; j < i; ++j) v *= std::pow(p.gap[i] - p.gap[j], beta);
    }
    return v;
  };
  const double ordered = integrate_ordered(static_cast<int>(params.n), 0.0, s, OrderedIntegrand(integrand), rel_tol);
  double factorial = 1;
  for (long k = 2; k <= params.n; ++k) factorial *= static_cast<double>(k);
  const double log_j = to_double(selberg_log(params.lambda1, params.lambda2, params.beta, params.n));
  return factorial * ordered * std::exp(-log_j);
}

double quadrature_circular_n2(double beta, double phi) {
  const double two_pi = 2 * M_PI;
  if (phi < 0 || phi > two_pi) throw InvalidParameters("phi must lie in [0, 2 pi]");
  auto integrand = [&](const std::vector<double>& x) { return std::pow(std::fabs(2 * std::sin(0.5 * (x[0] - x[1]))), beta); };
  const double num = 2 * integrate_ordered(2, phi, two_pi, integrand, 1e-11);
  const double den = two_pi * two_pi * std::exp(std::lgamma(1 + beta) - 2 * std::lgamma(1 + beta / 2));
  return num / den;
}

}  // namespace jacobi_edge
