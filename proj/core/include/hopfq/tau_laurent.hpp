#pragma once

#include <complex>
#include <string>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "hopfq/cyclotomic.hpp"

namespace hopfq {

/// Laurent polynomial in the free symbol tau (standing for 2 pi i) with
/// cyclotomic coefficients. Terms are sorted by exponent and never zero.
class TauLaurent {
 public:
  using Term = std::pair<int, Cyclotomic>;
  using Terms = boost::container::small_vector<Term, 1>;

  TauLaurent() = default;
  TauLaurent(Cyclotomic c);  // NOLINT(google-explicit-constructor)
  TauLaurent(Rational r) : TauLaurent(Cyclotomic(std::move(r))) {}  // NOLINT
  TauLaurent(long long v) : TauLaurent(Cyclotomic(v)) {}  // NOLINT

  /// c * tau^e
  static TauLaurent monomial(int e, Cyclotomic c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second.is_one(); }
  /// A Laurent polynomial is a unit iff it is a single nonzero monomial.
  bool is_unit() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  /// Coefficient of tau^0.
  Cyclotomic constant() const;

  TauLaurent operator-() const;
  TauLaurent inverse() const;

  friend TauLaurent operator+(const TauLaurent& a, const TauLaurent& b);
  friend TauLaurent operator-(const TauLaurent& a, const TauLaurent& b);
  friend TauLaurent operator*(const TauLaurent& a, const TauLaurent& b);

  TauLaurent& operator+=(const TauLaurent& b);
  TauLaurent& operator-=(const TauLaurent& b) { return *this = *this - b; }
  TauLaurent& operator*=(const TauLaurent& b) { return *this = *this * b; }

  friend bool operator==(const TauLaurent& a, const TauLaurent& b) { return a.terms_ == b.terms_; }

  std::complex<double> to_complex() const;

 private:
  Terms terms_;
};

}  // namespace hopfq
