#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hopfq/rational.hpp"
#include "hopfq/report.hpp"
#include "hopfq/series.hpp"

namespace hopfq {

/// coefficient · e^{τ(mx+nt)} y^p e^{τcy}, τ = 2πi.
struct HeisKey {
  int m = 0;
  int n = 0;
  int p = 0;
  Rational c;

  friend bool operator==(const HeisKey&, const HeisKey&) = default;
  friend std::strong_ordering operator<=>(const HeisKey& a, const HeisKey& b) {
    if (auto r = a.m <=> b.m; r != 0) return r;
    if (auto r = a.n <=> b.n; r != 0) return r;
    if (auto r = a.p <=> b.p; r != 0) return r;
    return a.c <=> b.c;
  }
};

/// Finite sum of Heisenberg monomials with ħ-series coefficients at a fixed
/// truncation order.
class HeisElement {
 public:
  using Terms = std::map<HeisKey, Scalar>;

  explicit HeisElement(int order) : order_(order) {}
  static HeisElement monomial(int order, int m, int n, int p, const Rational& c, const Scalar& coeff = Scalar(1));
  static HeisElement one(int order) { return monomial(order, 0, 0, 0, Rational(0)); }
  /// e^{τx}
  static HeisElement u(int order) { return monomial(order, 1, 0, 0, Rational(0)); }
  /// e^{τy}
  static HeisElement v(int order) { return monomial(order, 0, 0, 0, Rational(1)); }

  int order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add(const HeisKey& k, const Scalar& c);

  HeisElement operator+(const HeisElement& b) const;
  HeisElement operator-(const HeisElement& b) const;
  HeisElement scaled(const Scalar& s) const;
  friend bool operator==(const HeisElement& a, const HeisElement& b) { return a.terms_ == b.terms_; }

  /// The common t-winding n, if every term has the same one.
  std::optional<int> degree() const;
  /// Lowest ħ-degree among the coefficients, or -1 for zero.
  int valuation() const;
  HeisElement pointwise(const HeisElement& b) const;
  std::string str() const;

 private:
  int order_;
  Terms terms_;
};

enum class VectorField { X, Y, T };

/// X = ∂_x + y∂_t, Y = ∂_y, T = ∂_t.
HeisElement vf_apply(VectorField field, const HeisElement& f);

/// θ ∈ ħC[[ħ]]; throws NotFormallyNilpotent otherwise.
void check_theta(const Scalar& theta);

/// a ∗_θ b = m∘F_θ⁻¹(a⊗b) = Σ_k (θτ⁻¹)^k/k! (X^k a)(Y^k b). OrderMismatch
/// on different truncation orders.
HeisElement star(const HeisElement& a, const HeisElement& b, const Scalar& theta);

/// α_k(θ) = θ/(1 + kθ).
Scalar alpha(const Scalar& theta, int k);

/// (a ∗_{θ'} b) ∗_θ c - a ∗_{θ'} (b ∗_θ c); NotHomogeneous unless b has a degree.
HeisElement assoc_residual(const HeisElement& a, const HeisElement& b, const HeisElement& c, const Scalar& theta,
                           const Scalar& theta2);

/// f(x, y+1, t+x) as a monomial sum.
HeisElement m3_image(const HeisElement& f);
bool m3_membership(const HeisElement& f);

/// Finite sum of y^p e^{τcy} keyed by (p, c).
using PolyExp = std::map<std::pair<int, Rational>, Scalar>;

/// Zak-side element of degree n ≠ 0: f̃(y; j) for finitely many integers j.
/// This is the Zak image f̃(y + j/n; j) = f̂(y; j) of a finite Fourier sum
/// f = Σ_j e^{τ(jx+nt)} f̂(y; j).
class ZakElement {
 public:
  ZakElement(int degree, int order);

  int degree() const noexcept { return degree_; }
  int order() const noexcept { return order_; }
  const std::map<int, PolyExp>& parts() const noexcept { return parts_; }
  void add(int j, int p, const Rational& c, const Scalar& coeff);
  void add(int j, const PolyExp& f);
  bool is_zero() const noexcept { return parts_.empty(); }

  ZakElement operator-(const ZakElement& b) const;
  ZakElement scaled(const Scalar& s) const;
  friend bool operator==(const ZakElement& a, const ZakElement& b) {
    return a.degree_ == b.degree_ && a.parts_ == b.parts_;
  }
  std::size_t term_count() const;
  std::string str() const;

 private:
  int degree_;
  int order_;
  std::map<int, PolyExp> parts_;
};

/// f̃(y; j) = f̂(y - j/n; j). ZeroDegree or NotHomogeneous.
ZakElement zak_transform(const HeisElement& f);

/// Main: a.f̃ is the transform of a ∗_{θ'} f and f̃.a of f ∗_θ a.
/// Footnote: a.f̃ from f ∗_{-θ'} a and f̃.a from a ∗_{-θ} f.
enum class ZakConvention { Main, Footnote };

/// Word letters U, V and u = U⁻¹, v = V⁻¹. The left action applies the
/// letters right to left (w.f̃ = w₁.(w₂.(...))) with θ' = α_n(θ); the right
/// action applies them left to right. ZeroDegree for n = 0.
ZakElement zak_act_left(const std::string& word, const ZakElement& f, const Scalar& theta,
                        ZakConvention convention = ZakConvention::Main);
ZakElement zak_act_right(const ZakElement& f, const std::string& word, const Scalar& theta,
                         ZakConvention convention = ZakConvention::Main);

/// (f̃₁ ∗_θ f̃₂)(y; m) = Σ_{j+k=m} f̃₁(y + (jp-kn)/(n(n+p)); j)
///                      · f̃₂((1+nθ)y - (1-pθ)(jp-kn)/(p(n+p)); k).
/// DegenerateDegrees if n, p or n+p is zero.
ZakElement zak_pair(const ZakElement& f1, const ZakElement& f2, const Scalar& theta);

/// The word as an element of A₀ under ∗_θ.
HeisElement word_element(const std::string& word, const Scalar& theta, int order);

/// Seeded element of degree n with a few monomials.
HeisElement random_heis(std::uint64_t seed, int n, int order);

/// The θ battery is {ħ, ħ + ħ²} unless θ is given.
Report heis_torus_suite(std::uint64_t seed, int order, const std::optional<Scalar>& theta = std::nullopt);

}  // namespace hopfq
