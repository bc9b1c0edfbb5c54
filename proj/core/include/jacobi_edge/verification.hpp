#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jacobi_edge/params.hpp"

namespace jacobi_edge {

/// Cosine-sine bidiagonal model parameters; a = 2(lambda1+1)/beta - 1,
/// b = 2(lambda2+1)/beta - 1.
struct CSModelParams {
  double a = 0;
  double b = 0;
  double beta = 2;
  long n = 1;

  static CSModelParams from(const JacobiParams& p);
};

/// Squared singular values of the bidiagonal matrix built from given squared
/// cosines: cos2_theta has N entries, cos2_phi has N-1.
std::vector<double> cs_spectrum_from_angles(const std::vector<double>& cos2_theta, const std::vector<double>& cos2_phi);

/// One draw of the N squared singular values (ascending).
std::vector<double> sample_cs_spectrum(const CSModelParams& p, std::mt19937_64& rng);

/// Largest eigenvalues of `count` independent draws. Work is split into
/// fixed-size chunks, each with its own generator seeded from (seed, chunk),
/// so the output does not depend on the thread count.
std::vector<double> sample_lambda_max(const CSModelParams& p, std::size_t count, std::uint64_t seed,
                                      unsigned threads = 1);

/// Thread count from JACOBI_EDGE_THREADS, defaulting to hardware concurrency.
unsigned default_thread_count();

class EmpiricalCDF {
 public:
  explicit EmpiricalCDF(std::vector<double> samples);
  const std::vector<double>& sorted() const noexcept { return sorted_; }
  std::size_t count() const noexcept { return sorted_.size(); }
  /// Fraction of samples <= x.
  double operator()(double x) const;

 private:
  std::vector<double> sorted_;
};

std::vector<double> empirical_gap(const EmpiricalCDF& cdf, const std::vector<double>& grid);

/// Kolmogorov-Smirnov statistic sup |F_n - F| over the sample points.
double ks_distance(const EmpiricalCDF& empirical, const std::function<double(double)>& analytic);

/// Asymptotic 1% critical value 1.63 / sqrt(n).
double ks_threshold(std::size_t n);

/// Piecewise-linear table of a monotone function on [0, 1], refined until the
/// midpoint interpolation error is below `tol`.
class TabulatedFunction {
 public:
  TabulatedFunction(const std::function<double(double)>& f, double tol = 1e-6, int initial = 64, int max_depth = 20);
  double operator()(double x) const;
  std::size_t size() const noexcept { return xs_.size(); }

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

/// A point of the ordered simplex with gap[i] = upper - x[i] computed without
/// cancellation.
struct OrderedPoint {
  std::vector<double> x;
  std::vector<double> gap;
};
using OrderedIntegrand = std::function<double(const OrderedPoint&)>;

/// Adaptive Gauss-Legendre integral of f over the ordered simplex
/// upper > x_1 > x_2 > ... > x_dim > lower, with endpoint-clustering maps.
double integrate_ordered(int dim, double lower, double upper, const OrderedIntegrand& f, double rel_tol = 1e-12);
double integrate_ordered(int dim, double lower, double upper, const std::function<double(const std::vector<double>&)>& f,
                         double rel_tol = 1e-12);

/// Brute-force gap probability E(s) for N <= 3.
double quadrature_gap(const JacobiParams& params, double s, double rel_tol = 1e-9);

/// Brute-force circular gap probability for N = 2.
double quadrature_circular_n2(double beta, double phi);

/// One line of a verification report.
struct CheckResult {
  std::string test;
  double statistic = 0;
  double threshold = 0;
  bool pass = false;
};

}  // namespace jacobi_edge
