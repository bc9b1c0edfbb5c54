#include "jacobi_edge/rational.hpp"

#include <cmath>
#include <cctype>

#include "jacobi_edge/errors.hpp"

namespace jacobi_edge {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw InvalidParameters("not an exact rational: '" + std::string(text) + "' (expected p/q or an integer)");
  }
  Integer n(strip_plus(num), 10);
  Integer d(strip_plus(den), 10);
  if (d == 0) throw InvalidParameters("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_canonical_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

bool is_nonnegative_integer(const Rational& value) { return is_integer(value) && sgn(value) >= 0; }

long to_long(const Rational& value) {
  if (!is_integer(value) || !value.get_num().fits_slong_p()) {
    throw InvalidParameters("expected a machine-size integer, got " + to_canonical_string(value));
  }
  return value.get_num().get_si();
}

Rational floor_of(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return Rational(q);
}

Rational fractional_part(const Rational& value) { return value - floor_of(value); }

Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

Rational factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

double to_double(const Rational& value) { return value.get_d(); }

double log10_abs(const Rational& value) {
  if (sgn(value) == 0) return -1e300;
  long exp_num = 0;
  long exp_den = 0;
  const double mant_num = mpz_get_d_2exp(&exp_num, value.get_num().get_mpz_t());
  const double mant_den = mpz_get_d_2exp(&exp_den, value.get_den().get_mpz_t());
  return std::log10(std::fabs(mant_num / mant_den)) + static_cast<double>(exp_num - exp_den) * std::log10(2.0);
}

ComplexRational i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace jacobi_edge
