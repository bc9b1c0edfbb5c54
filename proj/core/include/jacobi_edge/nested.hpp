#pragma once

#include "jacobi_edge/lambda_series.hpp"
#include "jacobi_edge/recurrence.hpp"
#include "jacobi_edge/special.hpp"

namespace jacobi_edge {

/// Integral from 0 to x of t^lambda1 (1-t)^lambda2 h(t) for h in series form,
/// lambda1 a non-negative integer: every term (1-t)^b with b = (q+1)lambda2 + l
/// contributes B(lambda1, b) to the constant key and binomial terms to keys
/// (q+1, l+p+1).
template <class Field>
LambdaSeries<Field> integrate_against_weight(const LambdaSeries<Field>& h, long lambda1) {
  LambdaSeries<Field> out = h.empty_like();
  for (const auto& [k, c] : h.terms()) {
    const Field b = Field(k.q + 1) * h.lambda2() + Field(k.l);
    out.add({0, 0}, c * beta_value_exact_int<Field>(lambda1, b));
    for (long p = 0; p <= lambda1; ++p) {
      Field t = c * Field(binomial(lambda1, p)) / (b + Field(p + 1));
      out.add({k.q + 1, k.l + p + 1}, (p % 2 == 0) ? -t : t);
    }
  }
  return out;
}

/// Unnormalized n-fold integral over [0, x]^n of the Jacobi weight and
/// Vandermonde factor, built level by level: each level raises the
/// (x - x_j)^beta factor by beta sweeps and integrates in one more variable.
/// At x = 1 the constant key equals the full Selberg integral.
template <class Field>
LambdaSeries<Field> nested_gap_integral(long n, long lambda1, const Field& lambda2, long beta) {
  LambdaSeries<Field> k_level = integrate_against_weight(LambdaSeries<Field>::constant(lambda2, Field(1)), lambda1);
  for (long level = 1; level < n; ++level) {
    LambdaSeries<Field> j = std::move(k_level);
    for (long a = 0; a < beta; ++a) {
      j = sweep_series<Field>(j, level, Field(lambda1), lambda2, Field(beta), Field(a));
    }
    k_level = integrate_against_weight(j, lambda1);
    k_level.scale(Field(level + 1));
  }
  return k_level;
}

}  // namespace jacobi_edge
