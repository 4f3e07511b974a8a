#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace hopfq {

/// Exact rational number.
///
/// Values whose numerator and denominator fit in 62 bits are stored inline and
/// combined with 128-bit intermediates; anything larger is promoted to a GMP
/// rational. The representation is canonical: a value is stored in GMP form
/// if and only if it does not fit the inline form, so equality is field-wise.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "a" or "a/b" with optional leading sign.
  static Rational parse(const std::string& text);

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;
  bool is_small() const noexcept { return !big_; }

  mpq_class to_mpq() const;
  double to_double() const;
  std::string str() const;

  /// Numerator and denominator of the canonical form.
  mpz_class numerator() const;
  mpz_class denominator() const;

  Rational operator-() const;
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::size_t hash() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational binomial(int n, int k);
Rational factorial(int n);

}  // namespace hopfq
