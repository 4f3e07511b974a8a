#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "hopfq/tau_laurent.hpp"

namespace hopfq {

/// Truncated power series in the formal parameter hbar with TauLaurent
/// coefficients, computed modulo hbar^(K+1).
///
/// A series without hbar-dependence may be left order-free; it then adopts
/// the order of whatever it is combined with. Two series with explicit but
/// different orders cannot be combined (OrderMismatch).
class Series {
 public:
  static constexpr int kFree = -1;
  using Coeffs = boost::container::small_vector<TauLaurent, 1>;

  Series() = default;
  Series(TauLaurent c);  // NOLINT(google-explicit-constructor)
  Series(Cyclotomic c) : Series(TauLaurent(std::move(c))) {}  // NOLINT
  Series(Rational r) : Series(TauLaurent(std::move(r))) {}  // NOLINT
  Series(long long v) : Series(TauLaurent(v)) {}  // NOLINT
  Series(int v) : Series(TauLaurent(static_cast<long long>(v))) {}  // NOLINT

  /// hbar at truncation order k.
  static Series hbar(int k);
  /// tau^e (order-free).
  static Series tau(int e = 1);
  /// c * hbar^d at order k.
  static Series monomial(int d, TauLaurent c, int k);
  static Series from_coeffs(int k, std::vector<TauLaurent> coeffs);

  int order() const noexcept { return order_; }
  bool order_free() const noexcept { return order_ == kFree; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  TauLaurent coeff(int d) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  bool is_unit() const noexcept { return !coeffs_.empty() && coeffs_[0].is_unit(); }
  /// Lowest hbar-degree with a nonzero coefficient, or -1 for zero.
  int valuation() const noexcept;

  /// Same value at order k; lowering the order truncates, raising it is only
  /// allowed for order-free values.
  Series at_order(int k) const;

  Series operator-() const;

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator/(const Series& a, const Series& b);

  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b) { return *this = *this - b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }
  Series& operator/=(const Series& b) { return *this = *this / b; }

  /// Value equality; the truncation order is not compared.
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

  Series pow(long long e) const;

  /// Scalar-grammar rendering; parse_scalar(str(), order()) reproduces it.
  std::string str() const;

 private:
  void trim();

  int order_ = kFree;
  Coeffs coeffs_;
};

using Scalar = Series;

/// Combined order of two operands, or OrderMismatch.
int common_order(int a, int b);

Series series_invert(const Series& s);
Series series_exp(const Series& s);

/// Floating approximation with tau -> 2 pi i and hbar -> the given value.
/// Only for reports.
std::complex<double> numeric_eval(const Series& s, const Rational& hbar_value);
std::string numeric_eval_string(const Series& s, const Rational& hbar_value, int digits);

}  // namespace hopfq
