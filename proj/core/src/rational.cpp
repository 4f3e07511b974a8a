#include "hopfq/rational.hpp"

#include <ostream>
#include <utility>

#include "hopfq/error.hpp"

namespace hopfq {

namespace {

// Inline magnitude bound; products of two such values fit comfortably in an
// __int128 together with a sum of two of them.
constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

using u128 = unsigned __int128;
using i128 = __int128;

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

bool fits(i128 x) { return x > -kSmallLimit && x < kSmallLimit; }

mpz_class to_mpz(i128 x) {
  const bool neg = x < 0;
  u128 mag = abs128(x);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(long long value) {
  if (value > -kSmallLimit && value < kSmallLimit) {
    num_ = value;
  } else {
    big_ = std::make_unique<mpq_class>(mpz_class(std::to_string(value)));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) raise(ErrorKind::DivisionByZero, "rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this == &other) return *this;
  num_ = other.num_;
  den_ = other.den_;
  big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  try {
    mpq_class q(text, 10);
    if (q.get_den() == 0) raise(ErrorKind::DivisionByZero, "rational literal '" + text + "'");
    q.canonicalize();
    return from_mpq(std::move(q));
  } catch (const std::invalid_argument&) {
    raise(ErrorKind::ParseError, "bad rational literal '" + text + "'");
  }
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) raise(ErrorKind::DivisionByZero, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  Rational r;
  if (fits(num) && fits(den)) {
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  r.big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
  return r;
}

Rational Rational::from_mpq(mpq_class value) {
  Rational r;
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    long n = value.get_num().get_si();
    long d = value.get_den().get_si();
    if (n > -kSmallLimit && n < kSmallLimit && d < kSmallLimit) {
      r.num_ = n;
      r.den_ = d;
      return r;
    }
  }
  r.big_ = std::make_unique<mpq_class>(std::move(value));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

double Rational::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) raise(ErrorKind::DivisionByZero, "inverse of zero");
  if (big_) return from_mpq(1 / *big_);
  return from_wide(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::from_wide(static_cast<i128>(a.num_) - b.num_, a.den_);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                               static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    if (a.den_ == 1 && b.den_ == 1) return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, 1);
    return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "division by zero");
  if (!a.big_ && !b.big_) {
    return Rational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational();
  Rational out(1);
  for (int i = 1; i <= k; ++i) out = out * Rational(n - k + i, i);
  return out;
}

Rational factorial(int n) {
  Rational out(1);
  for (int i = 2; i <= n; ++i) out *= Rational(i);
  return out;
}

}  // namespace hopfq
