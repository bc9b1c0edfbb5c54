#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <utility>
#include <vector>

#include "jacobi_edge/circular.hpp"
#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/verification.hpp"

namespace jacobi_edge {

/// Canonical JSON: rationals as "num/den" strings, object keys sorted,
/// high-precision reals as 40-digit decimal strings.
using Json = nlohmann::json;

Json serialize(const Rational& x);
Json serialize(const Real& x);
Json serialize(const Poly& p);
Json serialize(const RationalSeries& g);
Json serialize(const MuLaurent& m);
Json serialize(const JacobiParams& p);
Json serialize(const HypParams& h);
Json serialize(const PolyGapForm& f);
Json serialize(const PolyDensityForm& f);
Json serialize(const HypGapForm& f);
Json serialize(const HypDensityForm& f);
Json serialize(const EdgeSeriesForm& f);
Json serialize(const EdgeDensityForm& f);
Json serialize(const GapForm& f);
Json serialize(const DensityForm& f);
Json serialize(const TrigGapForm& f);
Json serialize(const CheckResult& r);

/// Two-column table with header "s,value" (or another first column name),
/// values printed with 17 significant digits.
void write_curve_csv(std::ostream& out, const std::vector<std::pair<double, double>>& rows,
                     const char* first_column = "s");

}  // namespace jacobi_edge
