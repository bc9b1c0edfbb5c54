#include <gtest/gtest.h>

#include <cmath>

#include "jacobi_edge/circular.hpp"
#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/verification.hpp"

using namespace jacobi_edge;

namespace {

const double two_pi = 2 * M_PI;

double value(const TrigGapForm& f, double phi, double* imag = nullptr) {
  Real im;
  const double v = to_double(evaluate(f, Real(phi), &im));
  if (imag) *imag = to_double(im);
  return v;
}

}  // namespace

TEST(CircSeed, RejectsZeroExponent) {
  EXPECT_THROW(circ_seed(0, 0), InvalidParameters);
  EXPECT_EQ(circ_seed(1, 0).size(), 2u);
}

TEST(MuSeries, EulerOperator) {
  MuSeries g;
  g.add({0, 2}, RationalFunction(1));
  MuSeries r;
  r.add_euler(g, RationalFunction(1));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r.terms().at({0, 3}), RationalFunction(2));
  EXPECT_EQ(r.terms().at({0, 2}), RationalFunction(-2));
}

TEST(Circular, SingleEigenvalueIsUniform) {
  for (long beta : {1, 2, 3}) {
    const auto f = circ_gap_integer_beta(1, beta);
    for (double phi : {0.0, 1.0, 3.0, 5.5, two_pi}) EXPECT_NEAR(value(f, phi), 1 - phi / two_pi, 1e-14) << beta;
  }
}

TEST(Circular, UnitaryTwoByTwoClosedForm) {
  const auto f = circ_gap_integer_beta(2, 2);
  EXPECT_EQ(f.pi_power, 2);
  for (double phi : {0.3, 1.0, 2.0, 4.0, 6.0}) {
    const double expected = (std::pow(two_pi - phi, 2) - 2 + 2 * std::cos(phi)) / (4 * M_PI * M_PI);
    double imag = 0;
    EXPECT_NEAR(value(f, phi, &imag), expected, 1e-14) << phi;
    EXPECT_NEAR(imag, 0, 1e-30);
  }
}

TEST(Circular, EvenPathEqualsDirectPath) {
  for (auto [n, beta] : {std::pair{2L, 2L}, {3L, 2L}, {2L, 4L}}) {
    EXPECT_EQ(circ_gap_even_beta(n, beta), circ_gap_integer_beta(n, beta)) << n << " " << beta;
  }
}

TEST(Circular, EvenPathRejectsOddBeta) { EXPECT_THROW(circ_gap_even_beta(2, 3), InvalidParameters); }

TEST(Circular, TwoEigenvaluesAgainstQuadrature) {
  for (long beta : {1, 2, 3}) {
    const auto f = circ_gap_integer_beta(2, beta);
    EXPECT_NO_THROW(check_trig_form(f));
    for (double phi : {0.5, 2.0, 4.0}) EXPECT_NEAR(value(f, phi), quadrature_circular_n2(beta, phi), 1e-9) << beta;
  }
}

TEST(Circular, ThreeEigenvaluesOddBeta) {
  const auto f = circ_gap_integer_beta(3, 1);
  EXPECT_NO_THROW(check_trig_form(f));
  EXPECT_NEAR(value(f, 0), 1, 1e-14);
  EXPECT_NEAR(value(f, two_pi), 0, 1e-14);
}
