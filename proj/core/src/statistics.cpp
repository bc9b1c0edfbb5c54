#include <algorithm>
#include <cmath>

#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/verification.hpp"

namespace jacobi_edge {

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : sorted_(std::move(samples)) {
  if (sorted_.empty()) throw InvalidParameters("empirical CDF of an empty sample");
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::operator()(double x) const {
  if (sorted_.empty()) throw InvalidParameters("empirical CDF of an empty sample");
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

std::vector<double> empirical_gap(const EmpiricalCDF& cdf, const std::vector<double>& grid) {
  if (cdf.count() == 0) throw InvalidParameters("empirical_gap needs a nonempty sample");
  std::vector<double> out;
  out.reserve(grid.size());
  for (double s : grid) out.push_back(cdf(s));
  return out;
}

double ks_distance(const EmpiricalCDF& empirical, const std::function<double(double)>& analytic) {
  const auto& xs = empirical.sorted();
  if (xs.empty()) throw InvalidParameters("ks_distance: empty sample");
  const double n = static_cast<double>(xs.size());
  double d = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = analytic(xs[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_threshold(std::size_t n) { return 1.63 / std::sqrt(static_cast<double>(n)); }

TabulatedFunction::TabulatedFunction(const std::function<double(double)>& f, double tol, int initial, int max_depth) {
  std::vector<std::pair<double, double>> pts;
  auto refine = [&](auto&& self, double a, double fa, double b, double fb, int depth) -> void {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (depth < max_depth && std::fabs(fm - 0.5 * (fa + fb)) > tol) {
      self(self, a, fa, m, fm, depth + 1);
      self(self, m, fm, b, fb, depth + 1);
      return;
    }
    pts.emplace_back(m, fm);
    pts.emplace_back(b, fb);
  };
  double prev_x = 0;
  double prev_y = f(0.0);
  pts.emplace_back(prev_x, prev_y);
  for (int i = 1; i <= initial; ++i) {
    const double x = static_cast<double>(i) / initial;
    const double y = f(x);
    refine(refine, prev_x, prev_y, x, y, 0);
    prev_x = x;
    prev_y = y;
  }
  for (const auto& [x, y] : pts) {
    xs_.push_back(x);
    ys_.push_back(y);
  }
}

double TabulatedFunction::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
  const std::size_t lo = hi - 1;
  const double w = (x - xs_[lo]) / (xs_[hi] - xs_[lo]);
  return ys_[lo] + w * (ys_[hi] - ys_[lo]);
}

}  // namespace jacobi_edge
