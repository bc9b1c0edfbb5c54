#include "jacobi_edge/params.hpp"

#include "jacobi_edge/errors.hpp"

namespace jacobi_edge {

std::string to_string(CaseKind c) {
  switch (c) {
    case CaseKind::case1: return "case1";
    case CaseKind::case2: return "case2";
    case CaseKind::case3: return "case3";
  }
  return "?";
}

void JacobiParams::validate() const {
  if (n < 1) throw InvalidParameters("N must be a positive integer");
  if (lambda1 <= -1) throw InvalidParameters("lambda1 must exceed -1 (got " + to_canonical_string(lambda1) + ")");
  if (lambda2 <= -1) throw InvalidParameters("lambda2 must exceed -1 (got " + to_canonical_string(lambda2) + ")");
  if (sgn(beta) <= 0) throw InvalidParameters("beta must be positive (got " + to_canonical_string(beta) + ")");
}

std::optional<long> JacobiParams::case2_k() const {
  const Rational k = lambda2 + beta / 2;
  if (!is_nonnegative_integer(k)) return std::nullopt;
  return to_long(k);
}

bool JacobiParams::admits(CaseKind c) const {
  switch (c) {
    case CaseKind::case1: return is_nonnegative_integer(lambda2);
    case CaseKind::case2: return case2_k().has_value();
    case CaseKind::case3: return is_nonnegative_integer(lambda1) && is_integer(beta) && sgn(beta) > 0;
  }
  return false;
}

std::vector<CaseKind> JacobiParams::admissible_cases() const {
  std::vector<CaseKind> out;
  for (auto c : {CaseKind::case1, CaseKind::case2, CaseKind::case3}) {
    if (admits(c)) out.push_back(c);
  }
  return out;
}

std::string JacobiParams::diagnosis() const {
  std::string out;
  if (!admits(CaseKind::case1)) out += "case1 needs lambda2 a non-negative integer; ";
  if (!admits(CaseKind::case2)) out += "case2 needs lambda2 + beta/2 a non-negative integer; ";
  if (!admits(CaseKind::case3)) out += "case3 needs lambda1 a non-negative integer and beta a positive integer; ";
  if (out.empty()) return "all cases admissible";
  out.resize(out.size() - 2);
  return out;
}

JacobiParams case2_params(const Rational& lambda1, const Rational& beta, long k, long n) {
  if (k < 0) throw InvalidParameters("k must be a non-negative integer");
  JacobiParams p{lambda1, Rational(-beta / 2 + k), beta, n};
  p.validate();
  return p;
}

Rational gap_exponent0(const JacobiParams& p) { return p.n * (p.lambda1 + 1) + p.beta * p.n * (p.n - 1) / 2; }

}  // namespace jacobi_edge
