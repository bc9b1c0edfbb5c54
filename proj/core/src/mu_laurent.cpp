#include "jacobi_edge/mu_laurent.hpp"

namespace jacobi_edge {

MuLaurent MuLaurent::monomial(int power, const ComplexRational& c) {
  MuLaurent r;
  r.add(power, c);
  return r;
}

ComplexRational MuLaurent::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? ComplexRational{} : it->second;
}

int MuLaurent::pole_order() const {
  if (terms_.empty() || terms_.begin()->first >= 0) return 0;
  return -terms_.begin()->first;
}

void MuLaurent::add(int power, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MuLaurent& MuLaurent::operator+=(const MuLaurent& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

MuLaurent& MuLaurent::operator-=(const MuLaurent& o) {
  for (const auto& [k, c] : o.terms_) add(k, ComplexRational{-c.re, -c.im});
  return *this;
}

MuLaurent operator*(const MuLaurent& a, const MuLaurent& b) {
  MuLaurent r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) r.add(ka + kb, ca * cb);
  }
  return r;
}

MuLaurent operator*(const MuLaurent& a, const ComplexRational& c) {
  MuLaurent r;
  for (const auto& [k, v] : a.terms_) r.add(k, v * c);
  return r;
}

MuLaurent MuLaurent::truncated(int max_power) const {
  MuLaurent r;
  for (const auto& [k, c] : terms_) {
    if (k <= max_power) r.terms_.emplace(k, c);
  }
  return r;
}

}  // namespace jacobi_edge
