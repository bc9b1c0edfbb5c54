#include <string>

#include "jacobi_edge/gap_solvers.hpp"
#include "jacobi_edge/nested.hpp"

namespace jacobi_edge {

long EdgeSeriesForm::l_max(int q) const {
  return q * to_long(params.lambda1) + q * (params.n - q) * to_long(params.beta);
}

namespace {

void require_case3(const JacobiParams& params, const char* who) {
  params.validate();
  if (!params.admits(CaseKind::case3)) throw InvalidParameters(std::string(who) + ": " + params.diagnosis());
}

void check_sum_rule(const EdgeSeriesForm& form, const char* who) {
  Rational total = 1;
  for (const auto& [key, c] : form.gamma_tilde) total += c;
  if (sgn(total) != 0) {
    throw VerificationFailure(std::string(who) + ": 1 + sum of edge coefficients is " + to_canonical_string(total));
  }
}

// C(N,q) J_{q, lambda2, 0, beta} J_{N-q, lambda1, lambda2 + q beta, beta} / J_{N, lambda1, lambda2, beta}.
GammaProduct kappa_factors(const JacobiParams& p, long q) {
  GammaProduct prod;
  append_selberg_factors(prod, p.lambda2, 0, p.beta, q, 1);
  append_selberg_factors(prod, p.lambda1, p.lambda2 + q * p.beta, p.beta, p.n - q, 1);
  append_selberg_factors(prod, p.lambda1, p.lambda2, p.beta, p.n, -1);
  return prod;
}

}  // namespace

std::vector<FrobeniusSolution> frobenius_solutions(const JacobiParams& params) {
  require_case3(params, "frobenius");
  const long n = params.n;
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  std::vector<RecurrenceCoeffs<Rational>> cf;
  std::vector<Rational> mu(dim);
  std::vector<Rational> upper(dim);  // (N - p) E_p
  for (long p = 0; p <= n; ++p) {
    cf.push_back(coeffs<Rational>(p, n, params.lambda1, params.lambda2, params.beta, Rational(0)));
    mu[static_cast<std::size_t>(p)] = cf.back().a_p + cf.back().b_p;
    upper[static_cast<std::size_t>(p)] = (n - p) * cf.back().e_p;
  }
  const EdgeSeriesForm shape{params, {}};

  std::vector<FrobeniusSolution> out;
  for (long qg = 0; qg <= n; ++qg) {
    const long qp = n - qg;
    FrobeniusSolution sol;
    sol.q = static_cast<int>(qg);
    sol.mu_q = mu[static_cast<std::size_t>(qp)];

    // Leading vector: eigenvector of Z_{-1}, nonzero only in components 0..qp.
    std::vector<Rational> c0(dim);
    c0[0] = 1;
    for (long p = 0; p < n; ++p) {
      const auto up = static_cast<std::size_t>(p);
      c0[up + 1] = (mu[up] - sol.mu_q) / upper[up] * c0[up];
    }
    sol.coeff_vectors.push_back(std::move(c0));

    std::vector<Rational> tail_sum(dim);  // sum of c_l for l <= current - 2
    const long lmax = qg == 0 ? 0 : shape.l_max(static_cast<int>(qg));
    for (long ord = 1; ord <= lmax; ++ord) {
      const auto& prev = sol.coeff_vectors.back();
      if (ord >= 2) {
        const auto& older = sol.coeff_vectors[static_cast<std::size_t>(ord - 2)];
        for (std::size_t p = 0; p < dim; ++p) tail_sum[p] += older[p];
      }
      std::vector<Rational> rhs(dim);
      for (std::size_t p = 0; p < dim; ++p) {
        const Rational v = prev[p] + tail_sum[p];
        // Z_0 v: diagonal -B_p, superdiagonal (N-p)E_p; Y: subdiagonal D_p.
        rhs[p] = -cf[p].b_p * v;
        if (p + 1 < dim) rhs[p] += upper[p] * (prev[p + 1] + tail_sum[p + 1]);
        if (p >= 1) rhs[p] += cf[p].d_p * prev[p - 1];
      }
      std::vector<Rational> next(dim);
      for (long p = n; p >= 0; --p) {
        const auto up = static_cast<std::size_t>(p);
        const Rational pivot = mu[up] - sol.mu_q - ord;
        Rational num = rhs[up];
        if (up + 1 < dim) num += upper[up] * next[up + 1];
        if (sgn(pivot) == 0) {
          throw ResonanceError("frobenius: resonant pivot for solution q=" + std::to_string(qg) + " at order " +
                                   std::to_string(ord) + ", component " + std::to_string(p) +
                                   "; use the nested scheme",
                               static_cast<int>(qg), static_cast<int>(ord), static_cast<int>(p));
        }
        next[up] = num / pivot;
      }
      sol.coeff_vectors.push_back(std::move(next));
    }
    out.push_back(std::move(sol));
  }
  return out;
}

EdgeSeriesForm gap_case3_frobenius(const JacobiParams& params) {
  const auto sols = frobenius_solutions(params);
  EdgeSeriesForm form{params, {}};
  for (long qg = 1; qg <= params.n; ++qg) {
    const auto kappa = gamma_product_exact(kappa_factors(params, qg));
    if (!kappa) {
      throw NumericFailure("frobenius: proportionality constant for q=" + std::to_string(qg) +
                           " is irrational; use the nested scheme");
    }
    // Sign (-1)^(q + beta q(q-1)/2); the second factor only matters for odd beta.
    const Rational sign_exponent = qg + params.beta * qg * (qg - 1) / 2;
    const Rational scale = binomial(params.n, qg) * *kappa * (to_long(sign_exponent) % 2 != 0 ? -1 : 1);
    const auto& vecs = sols[static_cast<std::size_t>(qg)].coeff_vectors;
    for (std::size_t l = 0; l < vecs.size(); ++l) {
      const Rational c = vecs[l][0] * scale;
      if (sgn(c) != 0) form.gamma_tilde.emplace(std::pair<int, long>{static_cast<int>(qg), static_cast<long>(l)}, c);
    }
  }
  check_sum_rule(form, "frobenius");
  return form;
}

EdgeSeriesForm gap_case3_nested(const JacobiParams& params) {
  require_case3(params, "nested");
  const long l1 = to_long(params.lambda1);
  const long beta = to_long(params.beta);
  const RationalSeries total = nested_gap_integral<Rational>(params.n, l1, params.lambda2, beta);

  const Rational selberg = total.coefficient({0, 0});
  if (sgn(selberg) <= 0) throw NumericFailure("nested: non-positive total integral");
  GammaProduct j;
  append_selberg_factors(j, params.lambda1, params.lambda2, params.beta, params.n, 1);
  if (auto exact = gamma_product_exact(j)) {
    if (*exact != selberg) throw VerificationFailure("nested: total integral disagrees with the Selberg product");
  } else {
    const Real diff = log(to_real(selberg)) - gamma_product_log(j);
    if (abs(diff) > Real("1e-40")) throw VerificationFailure("nested: total integral disagrees with the Selberg value");
  }

  EdgeSeriesForm form{params, {}};
  for (const auto& [key, c] : total.terms()) {
    if (key.q == 0) {
      if (key.l != 0) throw VerificationFailure("nested: unexpected q = 0 term");
      continue;
    }
    const long l = key.l - key.q - to_long(params.beta * key.q * (key.q - 1) / 2);
    if (l < 0 || l > form.l_max(key.q)) {
      throw VerificationFailure("nested: edge exponent offset l = " + std::to_string(l) + " out of range for q = " +
                                std::to_string(key.q));
    }
    form.gamma_tilde.emplace(std::pair<int, long>{key.q, l}, c / selberg);
  }
  check_sum_rule(form, "nested");
  return form;
}

}  // namespace jacobi_edge
