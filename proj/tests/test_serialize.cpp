#include <gtest/gtest.h>

#include <sstream>

#include "jacobi_edge/serialize.hpp"

using namespace jacobi_edge;

TEST(Serialize, RationalsAreCanonicalStrings) {
  EXPECT_EQ(serialize(make_rational(6, -4)).get<std::string>(), "-3/2");
  EXPECT_EQ(serialize(Rational(4)).get<std::string>(), "4/1");
}

TEST(Serialize, PolyGapFormRoundTrip) {
  const auto f = gap_case1({0, 1, 2, 2});
  const Json j = serialize(f);
  EXPECT_EQ(j.dump(), Json::parse(j.dump()).dump());
  EXPECT_EQ(j["type"], "poly_gap");
  EXPECT_EQ(j["exponent0"], "4/1");
  EXPECT_EQ(j["gamma"], Json::array({"6/1", "-6/1", "1/1"}));
  EXPECT_EQ(j["params"]["n"], 2);
  // Keys come out sorted.
  const std::string dumped = j.dump();
  EXPECT_LT(dumped.find("\"exponent0\""), dumped.find("\"gamma\""));
  EXPECT_LT(dumped.find("\"gamma\""), dumped.find("\"params\""));
}

TEST(Serialize, EdgeSeriesCarriesExponents) {
  const Json j = serialize(gap_case3_nested({2, Rational(1, 2), 2, 1}));
  ASSERT_EQ(j["gamma_tilde"].size(), 3u);
  EXPECT_EQ(j["gamma_tilde"][0]["coeff"], "-35/8");
  EXPECT_EQ(j["gamma_tilde"][0]["exponent"], "3/2");
}

TEST(Serialize, TrigFormNamesItsVariable) {
  const Json j = serialize(circ_gap_integer_beta(1, 2));
  EXPECT_EQ(j["variable"], "psi = 2 pi - phi");
  EXPECT_EQ(j["normalization"]["pi_power"], 1);
}

TEST(Serialize, CurveCsv) {
  std::ostringstream out;
  write_curve_csv(out, {{0.0, 0.0}, {0.5, 0.203125}, {1.0, 1.0 / 3.0}});
  EXPECT_EQ(out.str(), "s,value\n0,0\n0.5,0.203125\n1,0.33333333333333331\n");
}
