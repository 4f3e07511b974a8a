#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfq/host.hpp"
#include "hopfq/leg_tensor.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

/// U(h₃) on the normal-ordered basis X^a Y^b T^c with [X,Y] = κT, T central
/// and X, Y, T primitive. κ = 0 gives the commuting primitives P₁ = X,
/// P₂ = Y. Exponents are capped at kMaxExponent (DegreeGuard).
class PbwHost {
 public:
  using Key = std::uint32_t;
  static constexpr int kMaxExponent = 1023;

  explicit PbwHost(int kappa);

  int kappa() const noexcept { return kappa_; }
  static Key key(int a, int b, int c);
  static std::array<int, 3> exponents(Key k) noexcept {
    return {static_cast<int>(k >> 20), static_cast<int>((k >> 10) & 1023u), static_cast<int>(k & 1023u)};
  }
  static Key x() { return key(1, 0, 0); }
  static Key y() { return key(0, 1, 0); }
  static Key t() { return key(0, 0, 1); }

  std::string name() const;
  bool finite() const noexcept { return false; }
  std::size_t dim() const noexcept { return 0; }
  bool diagonal() const noexcept { return false; }
  bool grouplike() const noexcept { return false; }
  Key inverse_key(Key) const;

  /// Y^b X^d = Σ_j C(b,j) C(d,j) j! (-κT)^j X^{d-j} Y^{b-j}.
  const SparseVec& multiply(Key a, Key b) const;
  const std::vector<CoTerm>& coproduct(Key a) const;
  const Scalar& counit(Key a) const;
  const SparseVec& unit() const noexcept { return unit_; }
  /// S(X^a Y^b T^c) = (-1)^{a+b+c} T^c Y^b X^a in normal order.
  SparseVec antipode(Key a) const;

  std::vector<Key> generators() const { return {x(), y(), t()}; }
  std::string label(Key a) const;

 private:
  int kappa_;
  SparseVec unit_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::uint64_t, SparseVec> products_;
  mutable std::unordered_map<Key, std::vector<CoTerm>> coproducts_;
};

using PbwTensor = LegTensor<PbwHost>;

/// Σ_k x^k / k! for x with no ħ-degree-0 part; throws NotFormallyNilpotent.
template <class Host>
LegTensor<Host> tensor_exp(const LegTensor<Host>& x) {
  for (const auto& [k, c] : x.entries()) {
    if (!c.coeff(0).is_zero()) raise(ErrorKind::NotFormallyNilpotent, "exponent has an ħ-degree-0 part");
  }
  LegTensor<Host> sum = LegTensor<Host>::one(x.host(), x.arity());
  LegTensor<Host> power = sum;
  const int top = x.max_order();
  for (int k = 1; k <= top && !power.is_zero(); ++k) {
    power = (power * x).scaled(Scalar(Rational(1, k)));
    sum = sum + power;
  }
  return sum;
}

PbwTensor pbw_exp(const PbwTensor& x);
PbwTensor pbw_mul(const PbwTensor& x, const PbwTensor& y);
/// c·X^a Y^b T^c as an arity-1 tensor.
PbwTensor pbw_monomial(const PbwHost& h, int a, int b, int c, const Scalar& coeff = Scalar(1));

/// e^{ħX} e^{ħY} - e^{½ħ²κT} e^{ħ(X+Y)} at ħ-order K.
PbwTensor bch_residual(const PbwHost& h, int order);

/// ∂²(e^{ħX} ⊗ e^{ħY}) and 1⊗c⊗c⊗1 with c = e^{ħ²κT} at ħ-order K.
std::pair<PbwTensor, PbwTensor> heisenberg_counterexample(const PbwHost& h, int order);

/// F_θ = exp(-θτ⁻¹ X⊗Y) (κ = -1 host).
PbwTensor f_theta(const PbwHost& h, const Scalar& theta);
/// Φ_{θ,θ'} = exp(τ⁻¹(θ-θ') X⊗1⊗Y - τ⁻²θθ' X⊗T⊗Y).
PbwTensor gcl_coassociator(const PbwHost& h, const Scalar& theta, const Scalar& theta2);
/// (Δ⊗id)(F_θ⁻¹)(F_θ'⁻¹⊗1) - (id⊗Δ)(F_θ'⁻¹)(1⊗F_θ⁻¹)Φ_{θ,θ'}.
PbwTensor gcl_identity_residual(const PbwHost& h, const Scalar& theta, const Scalar& theta2);

/// Seeded θ ∈ ħC[[ħ]] at the given order.
Scalar random_theta(std::uint64_t seed, int order);

/// Commuting primitives (κ = 0) at ħ-order K: F = e^{iħP₁⊗P₂} is a counital
/// cocycle, F' = α_g(F) = (∂g)F for g = e^{iħ/2·P₁P₂}, Δ_F = Δ, and A_F on a
/// window of plane waves e_k (P_j e_k = k_j e_k) is associative.
Report moyal_suite(int order);

/// BCH at orders 2..6 for κ = ±1, the ∂² counterexample, the coassociator
/// identity for seeded (θ,θ'), Φ_{θ,θ}, and the failure of F_θ to be a
/// cocycle or an equivariant twist.
Report pbw_gcl_suite(std::uint64_t seed, int order);

}  // namespace hopfq
