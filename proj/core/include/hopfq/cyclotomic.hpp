#pragma once

#include <complex>
#include <optional>
#include <string>

#include <boost/container/small_vector.hpp>

#include "hopfq/rational.hpp"

namespace hopfq {

/// Euler's totient.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic_polynomial(int n);

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} reduced modulo the N-th cyclotomic polynomial.
///
/// Binary operations align both operands at the lcm of their conductors.
/// Rational values are always stored at conductor 1 and zero has no coords.
class Cyclotomic {
 public:
  using Coords = boost::container::small_vector<Rational, 1>;

  Cyclotomic() = default;
  Cyclotomic(Rational value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long long value) : Cyclotomic(Rational(value)) {}  // NOLINT

  /// exp(2 pi i p / q) at conductor q.
  static Cyclotomic root_of_unity(long long p, long long q);

  /// Builds a value from power-basis coordinates (length at most phi(N)).
  static Cyclotomic from_coords(int conductor, Coords coords);

  int conductor() const noexcept { return conductor_; }
  const Coords& coords() const noexcept { return coords_; }

  bool is_zero() const noexcept { return coords_.empty(); }
  bool is_one() const noexcept { return conductor_ == 1 && coords_.size() == 1 && coords_[0].is_one(); }
  bool is_rational() const noexcept { return conductor_ == 1; }
  /// Rational part when the value is rational.
  std::optional<Rational> as_rational() const;

  /// Re-expresses the value at conductor l, which must be a multiple of the
  /// current conductor. Rational values stay at conductor 1.
  Cyclotomic embed(int l) const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long long e) const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  std::complex<double> to_complex() const;

  /// Scalar-grammar rendering, e.g. "1/2 - 3*z(5,2)".
  std::string str() const;

 private:
  void canonicalize();

  int conductor_ = 1;
  Coords coords_;
};

}  // namespace hopfq
