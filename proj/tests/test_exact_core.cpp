#include <gtest/gtest.h>

#include <random>

#include "jacobi_edge/lambda_series.hpp"
#include "jacobi_edge/mu_laurent.hpp"
#include "jacobi_edge/poly.hpp"
#include "jacobi_edge/rational_function.hpp"
#include "jacobi_edge/real.hpp"

using namespace jacobi_edge;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Poly random_poly(std::mt19937& rng, Var v = Var::s) {
  std::uniform_int_distribution<int> deg(0, 5);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return Poly(v, c);
}

RationalSeries random_series(std::mt19937& rng, const Rational& lambda2) {
  std::uniform_int_distribution<int> qd(0, 3);
  std::uniform_int_distribution<int> ld(0, 4);
  std::uniform_int_distribution<int> num(-9, 9);
  RationalSeries g(lambda2);
  for (int i = 0; i < 6; ++i) g.add({qd(rng), ld(rng)}, make_rational(num(rng), 3));
  return g;
}

}  // namespace

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(parse_rational("-3/4"), q(-3, 4));
  EXPECT_EQ(parse_rational("6/4"), q(3, 2));
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_EQ(to_canonical_string(q(0)), "0/1");
  EXPECT_EQ(to_canonical_string(parse_rational("-10/5")), "-2/1");
}

TEST(Rational, RejectsInexactInput) {
  EXPECT_THROW(parse_rational("0.75"), InvalidParameters);
  EXPECT_THROW(parse_rational("1e3"), InvalidParameters);
  EXPECT_THROW(parse_rational("1/0"), InvalidParameters);
  EXPECT_THROW(parse_rational(""), InvalidParameters);
}

TEST(Poly, DifferenceOfSquares) {
  const Poly a(Var::s, {1, 1});
  const Poly b(Var::s, {1, -1});
  EXPECT_EQ(a * b, Poly(Var::s, {1, 0, -1}));
}

TEST(Poly, Annihilator) {
  const Poly p(Var::s, {3, 2, 1});
  EXPECT_TRUE((p * Poly(Var::s)).is_zero());
}

TEST(Poly, AdditiveInverse) {
  const Poly sum = Poly(Var::s, {2, -1}) + Poly(Var::s, {-2, 1});
  EXPECT_TRUE(sum.is_zero());
  EXPECT_EQ(sum.degree(), -1);
}

TEST(Poly, VariableMismatchRejected) {
  EXPECT_THROW(Poly(Var::s, {1}) + Poly(Var::t, {1}), InvalidParameters);
}

TEST(Poly, RingAxiomsOnRandomInstances) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly a = random_poly(rng);
    const Poly b = random_poly(rng);
    const Poly c = random_poly(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    EXPECT_LE((a + b).degree(), std::max(a.degree(), b.degree()));
  }
}

TEST(Poly, DivisionAndGcd) {
  const Poly a = Poly(Var::s, {1, 1}) * Poly(Var::s, {2, 0, 1});
  const Poly b = Poly(Var::s, {1, 1}) * Poly(Var::s, {-3, 1});
  EXPECT_EQ(gcd(a, b), Poly(Var::s, {1, 1}));
  const auto [quo, rem] = a.divmod(Poly(Var::s, {1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(quo, Poly(Var::s, {2, 0, 1}));
}

TEST(Poly, ComposeLinear) {
  // (1 + x)^2 at x -> 1 - y is (2 - y)^2.
  const Poly p(Var::s, {1, 2, 1});
  EXPECT_EQ(p.compose_linear(-1, 1), Poly(Var::s, {4, -4, 1}));
}

TEST(RationalFunction, ReducedWithMonicDenominator) {
  const RationalFunction x = RationalFunction::variable();
  const RationalFunction f = (x * x - RationalFunction(1)) / (RationalFunction(2) * x + RationalFunction(2));
  EXPECT_EQ(f.den(), Poly::constant(Var::formal, 1));
  EXPECT_EQ(f.num(), Poly(Var::formal, {q(-1, 2), q(1, 2)}));
  EXPECT_TRUE((f - f).is_zero());
}

TEST(RationalFunction, LaurentExpansion) {
  // 1 / (x (1 - x)) = x^-1 + 1 + x + ...
  const RationalFunction x = RationalFunction::variable();
  const RationalFunction f = RationalFunction(1) / (x * (RationalFunction(1) - x));
  const auto l = f.laurent(2);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l.at(-1), 1);
  EXPECT_EQ(l.at(2), 1);
  EXPECT_EQ(f.pole_order(), 1);
}

TEST(LambdaSeries, DerivativeOfConstantIsEmpty) {
  const auto g = RationalSeries::constant(q(1, 2), 1);
  EXPECT_TRUE(series_derivative(g).empty());
}

TEST(LambdaSeries, PowerRule) {
  RationalSeries g(q(1, 2));
  g.add({1, 0}, 1);
  const auto d = series_derivative(g);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.coefficient({1, -1}), q(-1, 2));

  RationalSeries h(q(1, 2));
  h.add({0, 3}, 2);
  EXPECT_EQ(series_derivative(h).coefficient({0, 2}), -6);
}

TEST(LambdaSeries, AffineMultipliers) {
  const auto one = RationalSeries::constant(0, 1);
  const auto by_x = series_mul_affine(one, AffineFactor::x);
  EXPECT_EQ(by_x.coefficient({0, 0}), 1);
  EXPECT_EQ(by_x.coefficient({0, 1}), -1);

  RationalSeries g(0);
  g.add({1, 2}, 3);
  EXPECT_EQ(series_mul_affine(g, AffineFactor::one_minus_x).coefficient({1, 3}), 3);

  const auto xx1 = series_mul_affine(series_mul_affine(one, AffineFactor::x_minus_1), AffineFactor::x);
  EXPECT_EQ(xx1.size(), 2u);
  EXPECT_EQ(xx1.coefficient({0, 1}), -1);
  EXPECT_EQ(xx1.coefficient({0, 2}), 1);
}

TEST(LambdaSeries, LeibnizRuleOnRandomInstances) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_series(rng, q(2, 7));
    const auto lhs = series_derivative(series_mul_affine(g, AffineFactor::one_minus_x));
    auto rhs = series_mul_affine(series_derivative(g), AffineFactor::one_minus_x);
    rhs -= g;
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(LambdaSeries, RingAxiomsOnRandomInstances) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_series(rng, q(1, 3));
    const auto b = random_series(rng, q(1, 3));
    const auto c = random_series(rng, q(1, 3));
    EXPECT_EQ((a + b) + c, a + (b + c));
    auto lhs = series_mul_affine(a + b, AffineFactor::x);
    EXPECT_EQ(lhs, series_mul_affine(a, AffineFactor::x) + series_mul_affine(b, AffineFactor::x));
  }
}

TEST(LambdaSeries, FormalKeysStayDistinct) {
  RationalSeries g(q(1, 2));
  g.add({2, 0}, 3);
  g.add({0, 1}, 5);
  EXPECT_EQ(g.size(), 2u);
  const Real x("0.3");
  EXPECT_LT(abs(series_eval(g, x) - 8 * (1 - x)), Real("1e-100"));
}

TEST(LambdaSeries, EvaluationExamples) {
  EXPECT_EQ(series_eval(RationalSeries::constant(q(1, 2), 1), Real("0.7")), 1);
  RationalSeries g(q(1, 2));
  g.add({1, 0}, 1);
  EXPECT_LT(abs(series_eval(g, Real("0.75")) - Real("0.5")), Real("1e-100"));
  EXPECT_THROW(series_eval(g, Real("1.5")), InvalidParameters);
}

TEST(LambdaSeries, ExitInvariant) {
  RationalSeries g(q(1, 2));
  g.add({1, -1}, 1);
  EXPECT_THROW(g.check_exit_invariant(), VerificationFailure);
}

TEST(MuLaurent, PoleOrderOfProductIsBounded) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pw(-3, 2);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    MuLaurent a;
    MuLaurent b;
    for (int i = 0; i < 4; ++i) {
      a.add(pw(rng), {num(rng), num(rng)});
      b.add(pw(rng), {num(rng), num(rng)});
    }
    EXPECT_LE((a * b).pole_order(), a.pole_order() + b.pole_order());
  }
}

TEST(MuLaurent, ComplexArithmetic) {
  const auto a = MuLaurent::monomial(-1, {0, 1});
  const auto b = MuLaurent::monomial(1, {0, 1});
  const auto p = a * b;
  EXPECT_EQ(p.coefficient(0), (ComplexRational{-1, 0}));
  EXPECT_EQ(p.pole_order(), 0);
}
