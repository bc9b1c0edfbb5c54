#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "jacobi_edge/errors.hpp"
#include "jacobi_edge/verification.hpp"

namespace jacobi_edge {

namespace {

constexpr std::size_t chunk_size = 4096;

struct CosSin {
  double c;
  double s;
};

// Beta(p, q) variate via the gamma ratio; returns sqrt of both X/(X+Y) and
// Y/(X+Y) so that sines near zero keep full relative accuracy.
CosSin beta_cos_sin(double p, double q, std::mt19937_64& rng) {
  std::gamma_distribution<double> gx(p, 1.0);
  std::gamma_distribution<double> gy(q, 1.0);
  double x = 0;
  double y = 0;
  do {
    x = gx(rng);
    y = gy(rng);
  } while (x + y == 0);
  const double t = x + y;
  return {std::sqrt(x / t), std::sqrt(y / t)};
}

std::vector<double> bidiagonal_spectrum(const std::vector<CosSin>& theta, const std::vector<CosSin>& phi) {
  const auto n = theta.size();
  std::vector<double> d(n);
  std::vector<double> e(n > 1 ? n - 1 : 1);
  // Row k (1-based) carries index i = N - k + 1: diagonal c_i s'_i (s'_N = 1),
  // superdiagonal -s_i c'_{i-1}.
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t i = n - k + 1;
    const double sp = i == n ? 1.0 : phi[i - 1].s;
    d[k - 1] = theta[i - 1].c * sp;
    if (k < n) e[k - 1] = -theta[i - 1].s * phi[i - 2].c;
  }
  if (n > 1) {
    const lapack_int info = LAPACKE_dbdsqr(LAPACK_COL_MAJOR, 'U', static_cast<lapack_int>(n), 0, 0, 0, d.data(),
                                           e.data(), nullptr, 1, nullptr, 1, nullptr, 1);
    if (info != 0) throw NumericFailure("dbdsqr failed with info = " + std::to_string(info));
  }
  for (auto& v : d) v = v * v;
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

CSModelParams CSModelParams::from(const JacobiParams& p) {
  p.validate();
  const double beta = p.beta.get_d();
  return {2 * (p.lambda1.get_d() + 1) / beta - 1, 2 * (p.lambda2.get_d() + 1) / beta - 1, beta, p.n};
}

std::vector<double> cs_spectrum_from_angles(const std::vector<double>& cos2_theta, const std::vector<double>& cos2_phi) {
  if (cos2_theta.empty() || cos2_phi.size() + 1 != cos2_theta.size()) {
    throw InvalidParameters("cs model needs N theta angles and N-1 phi angles");
  }
  std::vector<CosSin> th;
  std::vector<CosSin> ph;
  for (double c2 : cos2_theta) th.push_back({std::sqrt(c2), std::sqrt(1 - c2)});
  for (double c2 : cos2_phi) ph.push_back({std::sqrt(c2), std::sqrt(1 - c2)});
  return bidiagonal_spectrum(th, ph);
}

std::vector<double> sample_cs_spectrum(const CSModelParams& p, std::mt19937_64& rng) {
  const double h = p.beta / 2;
  std::vector<CosSin> th;
  std::vector<CosSin> ph;
  th.reserve(static_cast<std::size_t>(p.n));
  for (long j = 1; j <= p.n; ++j) th.push_back(beta_cos_sin(h * (p.a + j), h * (p.b + j), rng));
  for (long j = 1; j < p.n; ++j) ph.push_back(beta_cos_sin(h * j, h * (p.a + p.b + 1 + j), rng));
  return bidiagonal_spectrum(th, ph);
}

std::vector<double> sample_lambda_max(const CSModelParams& p, std::size_t count, std::uint64_t seed, unsigned threads) {
  const double h = p.beta / 2;
  if (h * (p.a + 1) <= 0 || h * (p.b + 1) <= 0 || (p.n > 1 && h * (p.a + p.b + 2) <= 0)) {
    throw InvalidParameters("cs model: non-positive beta-law parameter");
  }
  std::vector<double> out(count);
  const std::size_t chunks = (count + chunk_size - 1) / chunk_size;
  auto run_chunk = [&](std::size_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    std::mt19937_64 rng(seq);
    const std::size_t end = std::min(count, (chunk + 1) * chunk_size);
    for (std::size_t i = chunk * chunk_size; i < end; ++i) out[i] = sample_cs_spectrum(p, rng).back();
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t c = t; c < chunks; c += threads) run_chunk(c);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("JACOBI_EDGE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace jacobi_edge
