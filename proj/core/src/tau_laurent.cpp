#include "hopfq/tau_laurent.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "hopfq/error.hpp"

namespace hopfq {

TauLaurent::TauLaurent(Cyclotomic c) {
  if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

TauLaurent TauLaurent::monomial(int e, Cyclotomic c) {
  TauLaurent out;
  if (!c.is_zero()) out.terms_.emplace_back(e, std::move(c));
  return out;
}

Cyclotomic TauLaurent::constant() const {
  for (const auto& [e, c] : terms_) {
    if (e == 0) return c;
  }
  return Cyclotomic();
}

TauLaurent TauLaurent::operator-() const {
  TauLaurent out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

TauLaurent TauLaurent::inverse() const {
  if (!is_unit()) raise(ErrorKind::NonUnit, "tau-Laurent polynomial is not a monomial");
  return monomial(-terms_[0].first, terms_[0].second.inverse());
}

TauLaurent operator+(const TauLaurent& a, const TauLaurent& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  TauLaurent out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Cyclotomic s = a.terms_[i].second + b.terms_[j].second;
      if (!s.is_zero()) out.terms_.emplace_back(a.terms_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

TauLaurent& TauLaurent::operator+=(const TauLaurent& b) {
  if (b.is_zero()) return *this;
  if (terms_.size() == 1 && b.terms_.size() == 1 && terms_[0].first == b.terms_[0].first) {
    terms_[0].second += b.terms_[0].second;
    if (terms_[0].second.is_zero()) terms_.clear();
    return *this;
  }
  return *this = *this + b;
}

TauLaurent operator-(const TauLaurent& a, const TauLaurent& b) { return a + (-b); }

TauLaurent operator*(const TauLaurent& a, const TauLaurent& b) {
  if (a.is_zero() || b.is_zero()) return TauLaurent();
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return TauLaurent::monomial(a.terms_[0].first + b.terms_[0].first, a.terms_[0].second * b.terms_[0].second);
  }
  std::map<int, Cyclotomic> acc;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  }
  TauLaurent out;
  for (auto& [e, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_back(e, std::move(c));
  }
  return out;
}

std::complex<double> TauLaurent::to_complex() const {
  const std::complex<double> tau(0.0, 2.0 * std::numbers::pi);
  std::complex<double> out = 0.0;
  for (const auto& [e, c] : terms_) out += c.to_complex() * std::pow(tau, e);
  return out;
}

}  // namespace hopfq
