#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/verification.hpp"

using namespace jacobi_edge;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

JacobiParams jp(long n, Rational l1, Rational l2, Rational beta) { return {std::move(l1), std::move(l2), std::move(beta), n}; }

// Exact polynomial in s of an edge expansion whose exponents are integers.
Poly edge_to_poly(const EdgeSeriesForm& f) {
  Poly out = Poly::constant(Var::s, 1);
  const Poly one_minus(Var::s, {1, -1});
  for (const auto& [key, c] : f.gamma_tilde) {
    Poly term = Poly::constant(Var::s, c);
    for (long e = 0; e < to_long(f.exponent(key.first, key.second)); ++e) term *= one_minus;
    out += term;
  }
  return out;
}

double num(const Real& x) { return to_double(x); }

}  // namespace

TEST(GapCase1, SingleVariable) {
  const auto f = gap_case1(jp(1, 0, 1, 2));
  EXPECT_EQ(f.exponent0, 1);
  EXPECT_EQ(f.gamma, (std::vector<Rational>{2, -1}));
}

TEST(GapCase1, TwoVariableWorkedExample) {
  const auto f = gap_case1(jp(2, 0, 1, 2));
  EXPECT_EQ(f.exponent0, 4);
  EXPECT_EQ(f.gamma, (std::vector<Rational>{6, -6, 1}));
  EXPECT_LT(abs(evaluate(f, Real("0.5")) - to_real(q(13, 64))), Real("1e-100"));
  EXPECT_EQ(evaluate(f, Real(0)), 0);
  EXPECT_EQ(evaluate(f, Real(1)), 1);
}

TEST(GapCase1, ZeroLambda2IsPurePower) {
  const auto f = gap_case1(jp(6, q(1, 3), 0, q(5, 2)));
  EXPECT_EQ(f.gamma, (std::vector<Rational>{1}));
  EXPECT_EQ(f.exponent0, 6 * q(4, 3) + q(5, 2) * 15);
}

TEST(GapCase1, RejectsNonIntegerLambda2) {
  EXPECT_THROW(gap_case1(jp(2, 0, q(1, 2), 2)), InvalidParameters);
  EXPECT_THROW(gap_case1(jp(2, -1, 1, 2)), InvalidParameters);
}

TEST(GapCase1, MonotoneAndMatchesOracle) {
  const auto p = jp(3, q(-3, 4), 2, q(7, 8));
  const GapForm f = gap_case1(p);
  EXPECT_NO_THROW(check_monotone_gap(f));
  for (double s : {0.2, 0.5, 0.8}) EXPECT_NEAR(num(evaluate(f, Real(s))), quadrature_gap(p, s), 1e-8);
}

TEST(GapCase2, ZeroSweeps) {
  const auto f = gap_case2(q(3, 2), 1, 0, 3);
  EXPECT_EQ(f.p_poly, Poly::constant(Var::s, 1));
  EXPECT_TRUE(f.q_poly.is_zero());
}

TEST(GapCase2, SingleVariableClosedForm) {
  const auto f = gap_case2(0, 1, 1, 1);
  for (int i = 0; i <= 20; ++i) {
    const Real s = Real(i) / 21;
    EXPECT_LT(abs(evaluate(f, s) - (1 - pow(1 - s, Real(3) / 2))), Real("1e-12")) << i;
  }
}

TEST(GapCase2, CoincidesWithCase1ForEvenBeta) {
  const struct {
    long n;
    Rational l1;
    Rational beta;
    long k;
  } cases[] = {{3, q(1, 2), 2, 3}, {2, 1, 4, 4}, {4, q(-1, 3), 2, 2}};
  for (const auto& c : cases) {
    const auto hyp = gap_case2(c.l1, c.beta, c.k, c.n);
    const auto poly = gap_case1(jp(c.n, c.l1, -c.beta / 2 + c.k, c.beta));
    for (int i = 1; i <= 20; ++i) {
      const Real s = Real(i) / 21;
      EXPECT_LT(abs(evaluate(hyp, s) - evaluate(poly, s)), Real("1e-10")) << i;
    }
  }
}

TEST(GapCase2, MatchesOracle) {
  const Rational l1 = q(1, 2);
  const Rational beta = q(3, 2);
  const auto f = gap_case2(l1, beta, 1, 2);
  const auto p = jp(2, l1, beta / -2 + 1, beta);
  for (double s : {0.2, 0.5, 0.8}) EXPECT_NEAR(num(evaluate(f, Real(s))), quadrature_gap(p, s), 1e-8);
  EXPECT_NO_THROW(check_monotone_gap(GapForm(f)));
}

TEST(GapCase3, SingleVariableCoefficients) {
  const std::map<std::pair<int, long>, Rational> expected{{{1, 0}, q(-35, 8)}, {{1, 1}, q(21, 4)}, {{1, 2}, q(-15, 8)}};
  EXPECT_EQ(gap_case3_nested(jp(1, 2, q(1, 2), 1)).gamma_tilde, expected);
  EXPECT_EQ(gap_case3_nested(jp(1, 2, q(1, 2), 2)).gamma_tilde, expected);
  EXPECT_EQ(gap_case3_frobenius(jp(1, 2, q(1, 2), 2)).gamma_tilde, expected);
}

TEST(GapCase3, NestedReproducesCase1Polynomial) {
  const auto f = gap_case3_nested(jp(2, 0, 1, 2));
  EXPECT_EQ(edge_to_poly(f), Poly(Var::s, {0, 0, 0, 0, 6, -6, 1}));
}

TEST(GapCase3, FrobeniusLeadingData) {
  const auto p = jp(3, 1, q(5, 4), 2);
  const auto sols = frobenius_solutions(p);
  ASSERT_EQ(sols.size(), 4u);
  EXPECT_EQ(sols[0].mu_q, 0);
  EXPECT_EQ(sols[0].coeff_vectors.size(), 1u);
  EXPECT_EQ(sols[0].coeff_vectors[0][0], 1);
  EXPECT_EQ(sols[3].mu_q, 3 * (p.lambda2 + 2 + 1));
  for (const auto& s : sols) {
    // Leading vector supported on components 0..N-q.
    for (std::size_t comp = static_cast<std::size_t>(p.n - s.q) + 1; comp <= static_cast<std::size_t>(p.n); ++comp) {
      EXPECT_EQ(s.coeff_vectors[0][comp], 0);
    }
  }
}

TEST(GapCase3, SchemesAgreeExactly) {
  for (const auto& p : {jp(2, 1, q(1, 2), 2), jp(3, 0, q(5, 4), 2), jp(2, 2, q(2, 3), 4), jp(4, 2, q(7, 3), 2)}) {
    EXPECT_EQ(gap_case3_frobenius(p).gamma_tilde, gap_case3_nested(p).gamma_tilde) << p.n;
  }
}

TEST(GapCase3, OddBetaMatchesOracle) {
  for (const auto& p : {jp(2, 1, q(1, 2), 1), jp(3, 0, q(1, 3), 1), jp(2, 0, q(-1, 2), 3)}) {
    const GapForm f = gap_case3_nested(p);
    for (double s : {0.2, 0.5, 0.8}) EXPECT_NEAR(num(evaluate(f, Real(s))), quadrature_gap(p, s), 1e-8) << p.n;
    EXPECT_NO_THROW(check_monotone_gap(f));
  }
}

TEST(GapCase3, OddBetaSchemesAgreeExactly) {
  for (const auto& p : {jp(2, 1, q(1, 2), 1), jp(3, 0, q(1, 3), 1), jp(3, 1, q(1, 2), 3), jp(3, 2, q(2, 3), 5)}) {
    EXPECT_EQ(gap_case3_frobenius(p).gamma_tilde, gap_case3_nested(p).gamma_tilde) << p.n;
  }
  EXPECT_TRUE(std::holds_alternative<EdgeSeriesForm>(solve_gap(jp(2, 1, q(1, 3), 1))));
}

TEST(GapCase3, RejectsNonIntegerLambda1) {
  EXPECT_THROW(gap_case3_nested(jp(2, q(1, 2), q(1, 3), 2)), InvalidParameters);
  EXPECT_THROW(gap_case3_nested(jp(2, 1, q(1, 3), q(3, 2))), InvalidParameters);
}

TEST(PmaxCase1, Examples) {
  const auto one = pmax_case1(jp(1, 0, 1, 2));
  EXPECT_EQ(one.exponent, 0);
  EXPECT_EQ(one.one_minus_power, 1);
  EXPECT_EQ(one.gamma, (std::vector<Rational>{2}));
  const auto two = pmax_case1(jp(2, 0, 1, 2));
  EXPECT_EQ(two.exponent, 3);
  EXPECT_EQ(two.gamma, (std::vector<Rational>{24, -6}));
}

TEST(PmaxCase1, IntegratesToOne) {
  const auto f = pmax_case1(jp(4, q(-1, 2), 3, q(5, 3)));
  const double total = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double s) { return num(evaluate(f, Real(s))); }, 0.0, 1.0, 15, 1e-14);
  EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(PmaxCase2, SingleVariableIsBetaDensity) {
  const Rational l1 = q(3, 2);
  const Rational beta = q(5, 3);
  const auto f = pmax_case2(l1, beta, 2, 1);
  const Rational l2 = -beta / 2 + 2;
  for (double s : {0.1, 0.4, 0.85}) {
    const Real x(s);
    const Real expected = pow_rational(x, l1) * pow_rational(1 - x, l2) / beta_value(l1, l2);
    EXPECT_LT(abs(evaluate(f, x) / expected - 1), Real("1e-30")) << s;
  }
}

TEST(PmaxCase2, ZeroSweeps) {
  const auto f = pmax_case2(1, 1, 0, 3);
  EXPECT_EQ(f.p_poly, Poly::constant(Var::s, 1));
  EXPECT_TRUE(f.q_poly.is_zero());
}

TEST(PmaxCase2, MatchesNumericDerivativeOfGap) {
  const Rational l1 = q(2, 3);
  const Rational beta = q(5, 2);
  const auto gap = gap_case2(l1, beta, 3, 3);
  const auto dens = pmax_case2(l1, beta, 3, 3);
  const Real h("1e-25");
  for (double s : {0.3, 0.6, 0.9}) {
    const Real x(s);
    const Real fd = (evaluate(gap, x + h) - evaluate(gap, x - h)) / (2 * h);
    EXPECT_LT(abs(fd - evaluate(dens, x)), Real("1e-8")) << s;
  }
}

TEST(HardEdge, RescaledDensityApproachesExponentialLaw) {
  // At lambda2 = 0 the rescaled density N^-2 p_max(1 - s/N^2) tends to
  // (beta/2) exp(-beta s / 2).
  for (long b : {1, 2, 4}) {
    const auto f = pmax_case1(jp(40, 0, 0, b));
    for (double s = 0.1; s <= 2.0 + 1e-12; s += 0.1) {
      const double v = num(evaluate(f, Real(1) - Real(s) / 1600)) / 1600;
      const double limit = b / 2.0 * std::exp(-b * s / 2);
      EXPECT_LT(std::fabs(v / limit - 1), 0.05) << "beta=" << b << " s=" << s;
    }
  }
}

TEST(Pmin, ReflectionOfPmax) {
  const auto p = jp(3, 2, 2, q(3, 2));
  const DensityForm pmax = solve_pmax(p);
  for (double s : {0.2, 0.5, 0.7}) {
    EXPECT_LT(abs(pmin(p, Real(s)) - evaluate(pmax, Real(1) - Real(s))), Real("1e-40"));
  }
  const auto single = jp(1, q(1, 2), 3, 2);
  const DensityForm one = solve_pmax(single);
  EXPECT_LT(abs(pmin(single, Real("0.3")) - evaluate(one, Real("0.3"))), Real("1e-40"));
  EXPECT_THROW(pmin(jp(2, q(1, 3), q(1, 2), q(2, 3)), Real("0.5")), InvalidParameters);
}

TEST(Pmin, GapReflectionAgainstOracle) {
  // E(0; (s, 1); l1, l2) = E(0; (0, 1-s); l2, l1) = P(all eigenvalues > 1-s).
  const auto p = jp(2, 1, q(1, 2), q(3, 2));
  const double l1 = 1;
  const double l2 = 0.5;
  const double beta = 1.5;
  auto reflected = [&](const std::vector<double>& x) {
    return std::pow(x[0], l2) * std::pow(1 - x[0], l1) * std::pow(x[1], l2) * std::pow(1 - x[1], l1) *
           std::pow(std::fabs(x[0] - x[1]), beta);
  };
  const double total = integrate_ordered(2, 0.0, 1.0, reflected);
  for (double s : {0.2, 0.5, 0.8}) {
    const double upper = integrate_ordered(2, 1 - s, 1.0, reflected) / total;
    EXPECT_NEAR(quadrature_gap(p, s), upper, 1e-8);
  }
}

TEST(SolveGap, AutomaticDispatch) {
  EXPECT_TRUE(std::holds_alternative<PolyGapForm>(solve_gap(jp(2, 0, 1, 2))));
  EXPECT_TRUE(std::holds_alternative<HypGapForm>(solve_gap(jp(2, 0, q(1, 2), 1))));
  EXPECT_TRUE(std::holds_alternative<EdgeSeriesForm>(solve_gap(jp(2, 0, q(1, 3), 2))));
  EXPECT_THROW(solve_gap(jp(2, q(1, 2), q(1, 3), 2)), InvalidParameters);
  EXPECT_EQ(parse_scheme("case3-nested"), Scheme::case3_nested);
  EXPECT_THROW(parse_scheme("fast"), InvalidParameters);
}
