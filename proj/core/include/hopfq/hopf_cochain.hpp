#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hopfq/error.hpp"
#include "hopfq/group_cohomology.hpp"
#include "hopfq/hopf_verify.hpp"
#include "hopfq/host.hpp"
#include "hopfq/leg_tensor.hpp"
#include "hopfq/presentation.hpp"
#include "hopfq/report.hpp"

namespace hopfq {

/// Invertible element of H^{⊗n} with its inverse.
template <class Host>
class HopfCochain {
 public:
  using Tensor = LegTensor<Host>;

  /// Throws NotInvertible.
  explicit HopfCochain(Tensor value) : value_(std::move(value)), inverse_(value_.invert()) {}
  /// Caller supplies the inverse; checked on both sides.
  HopfCochain(Tensor value, Tensor inverse) : value_(std::move(value)), inverse_(std::move(inverse)) {
    const Tensor one = Tensor::one(value_.host(), value_.arity());
    if (!(value_ * inverse_ == one) || !(inverse_ * value_ == one)) {
      raise(ErrorKind::NotInvertible, "supplied inverse is not two-sided");
    }
  }

  static HopfCochain one(const Host& host, int arity) {
    const Tensor u = Tensor::one(host, arity);
    return HopfCochain(u, u);
  }
  /// No check; for inverses known by construction.
  static HopfCochain unchecked(Tensor value, Tensor inverse) {
    return HopfCochain(std::move(value), std::move(inverse), Trusted{});
  }

  const Tensor& value() const noexcept { return value_; }
  const Tensor& inverse() const noexcept { return inverse_; }
  int arity() const noexcept { return value_.arity(); }
  const Host& host() const noexcept { return value_.host(); }

 private:
  struct Trusted {};
  HopfCochain(Tensor value, Tensor inverse, Trusted) : value_(std::move(value)), inverse_(std::move(inverse)) {}

  Tensor value_;
  Tensor inverse_;
};

/// Face maps Δ_0 .. Δ_{n+1} : H^{⊗n} -> H^{⊗n+1}; a custom face family
/// yields the coboundary of a deformed coproduct.
template <class Host>
using FaceMap = std::function<LegTensor<Host>(const LegTensor<Host>&, int)>;

template <class Host>
FaceMap<Host> plain_faces() {
  return [](const LegTensor<Host>& x, int i) { return x.face(i); };
}

/// ∂h = (∂₊h)(∂₋h⁻¹) with ∂₊ = Δ_0 Δ_2 ..., ∂₋ = Δ_1 Δ_3 ... in increasing
/// order. Since every face is an algebra map, the inverse is the product of
/// the same factors in reverse with h and h⁻¹ exchanged.
template <class Host>
HopfCochain<Host> coboundary_with(const HopfCochain<Host>& h, const FaceMap<Host>& face) {
  using Tensor = LegTensor<Host>;
  const int n = h.arity();
  Tensor value = Tensor::one(h.host(), n + 1);
  Tensor inverse = Tensor::one(h.host(), n + 1);
  for (int i = 0; i <= n + 1; i += 2) value *= face(h.value(), i);
  for (int i = 1; i <= n + 1; i += 2) value *= face(h.inverse(), i);
  for (int i = (n + 1) % 2 == 1 ? n + 1 : n; i >= 1; i -= 2) inverse *= face(h.value(), i);
  for (int i = (n + 1) % 2 == 0 ? n + 1 : n; i >= 0; i -= 2) inverse *= face(h.inverse(), i);
  return HopfCochain<Host>::unchecked(std::move(value), std::move(inverse));
}

template <class Host>
HopfCochain<Host> hopf_coboundary(const HopfCochain<Host>& h) {
  return coboundary_with(h, plain_faces<Host>());
}

/// The leg-notation closed forms for n = 1, 2, 3:
///   h_1 h_2 (h⁻¹)_{(12)},  h_{23} h_{1(23)} (h⁻¹)_{(12)3} (h⁻¹)_{12},
///   h_{234} h_{1(23)4} h_{123} (h⁻¹)_{(12)34} (h⁻¹)_{12(34)}.
template <class Host>
LegTensor<Host> hopf_coboundary_closed(const HopfCochain<Host>& h) {
  const auto& x = h.value();
  const auto& y = h.inverse();
  switch (h.arity()) {
    case 1:
      return x.tensor(x) * y.coproduct_leg(1);
    case 2:
      return x.leg_embed({2, 3}, 3) * x.coproduct_leg(2) * y.coproduct_leg(1) * y.leg_embed({1, 2}, 3);
    case 3:
      return x.leg_embed({2, 3, 4}, 4) * x.coproduct_leg(2) * x.leg_embed({1, 2, 3}, 4) * y.coproduct_leg(1) *
             y.coproduct_leg(3);
    default:
      raise(ErrorKind::ArityMismatch, "closed forms exist for arity 1..3");
  }
}

/// ε applied to each leg gives 1^{⊗n-1}.
template <class Host>
bool is_counital(const LegTensor<Host>& h) {
  const auto one = LegTensor<Host>::one(h.host(), h.arity() - 1);
  for (int i = 1; i <= h.arity(); ++i) {
    if (!(h.counit_leg(i) == one)) return false;
  }
  return true;
}

/// Residual terms of [h, Δ^{(n)}(a)] summed over the host generators.
template <class Host>
std::size_t invariance_residual(const LegTensor<Host>& h, std::string* witness = nullptr) {
  std::size_t total = 0;
  for (auto a : h.host().generators()) {
    const auto d = LegTensor<Host>::iterated_coproduct(h.host(), a, h.arity());
    const std::size_t r = (h * d).residual_terms(d * h);
    if (r && !total && witness) *witness = h.host().label(a);
    total += r;
  }
  return total;
}

template <class Host>
bool is_invariant(const LegTensor<Host>& h) {
  return invariance_residual(h) == 0;
}

/// ∂(∂h).
template <class Host>
LegTensor<Host> dsquared(const HopfCochain<Host>& h) {
  if (h.arity() < 1 || h.arity() > 2) raise(ErrorKind::ArityMismatch, "dsquared expects arity 1 or 2");
  return hopf_coboundary(hopf_coboundary(h)).value();
}

/// α_g(F) = (∂₊g) F (∂₋g⁻¹) = (g⊗g) F Δ(g⁻¹).
template <class Host>
HopfCochain<Host> gauge_act(const HopfCochain<Host>& g, const HopfCochain<Host>& f) {
  if (g.arity() != 1 || f.arity() != 2) raise(ErrorKind::ArityMismatch, "gauge action needs a 1- and a 2-cochain");
  const auto gg = g.value().tensor(g.value());
  const auto gi = g.inverse().tensor(g.inverse());
  return HopfCochain<Host>(gg * f.value() * g.inverse().coproduct_leg(1),
                           g.value().coproduct_leg(1) * f.inverse() * gi);
}

/// ∂F = 1^{⊗n+1}.
template <class Host>
bool is_in_kernel(const HopfCochain<Host>& f) {
  return hopf_coboundary(f).value() == LegTensor<Host>::one(f.host(), f.arity() + 1);
}

/// Witness check for F' = α_g(F).
template <class Host>
bool gauge_equivalent(const HopfCochain<Host>& f, const HopfCochain<Host>& f2, const HopfCochain<Host>& g) {
  return gauge_act(g, f).value() == f2.value();
}

/// Algebra A with an action of the host: action(h, i) is h ▷ a_i.
template <class Host>
struct ModuleAlgebra {
  const Host* host = nullptr;
  AlgebraPresentation algebra;
  std::function<SparseVec(typename Host::Key, std::uint32_t)> action;

  /// x ▷ (a_{i_1} ⊗ ... ⊗ a_{i_n}) as a flat tensor over A.
  SparseVec act(const LegTensor<Host>& x, const std::vector<std::uint32_t>& idx) const {
    const auto d = static_cast<std::uint32_t>(algebra.dim());
    SparseVec out;
    for (const auto& [k, c] : x.entries()) {
      SparseVec t{{0, c}};
      for (std::size_t l = 0; l < idx.size(); ++l) t = tensor(t, action(k[l], idx[l]), d);
      out = axpy(out, Scalar(1), t);
    }
    return out;
  }
};

/// h ▷ (ab) = (h₍₁₎ ▷ a)(h₍₂₎ ▷ b) and h ▷ 1 = ε(h)1 on generators and basis pairs.
template <class Host>
Report verify_module_algebra(const ModuleAlgebra<Host>& m) {
  Report r;
  r.name = m.algebra.name;
  const auto d = static_cast<std::uint32_t>(m.algebra.dim());
  Tally mult;
  Tally unit;
  for (auto h : m.host->generators()) {
    const auto dh = LegTensor<Host>::iterated_coproduct(*m.host, h, 2);
    SparseVec on_unit;
    for (const auto& [i, c] : m.algebra.unit) on_unit = axpy(on_unit, c, m.action(h, i));
    unit.record(axpy(on_unit, -m.host->counit(h), m.algebra.unit).size(), m.host->label(h));
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        try {
          SparseVec lhs;
          for (const auto& [k, c] : m.algebra.product(i, j)) lhs = axpy(lhs, c, m.action(h, k));
          const SparseVec rhs = m.algebra.multiply_flat(m.act(dh, {i, j}));
          mult.record(axpy(lhs, Scalar(-1), rhs).size(),
                      m.host->label(h) + "▷" + m.algebra.basis[i] + "*" + m.algebra.basis[j]);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::WindowOverflow) throw;
        }
      }
    }
  }
  mult.into(r, "module-multiplicative");
  unit.into(r, "module-unital");
  return r;
}

/// Twist data: Δ_F = FΔ(·)F⁻¹, Φ_F = ∂F, and optionally A_F with
/// a *_F b = m(F⁻¹ ▷ (a⊗b)) and associator Φ_F ▷.
template <class Host>
class QuasiHopfTwist {
 public:
  using Tensor = LegTensor<Host>;
  using Key = typename Host::Key;

  /// Throws NotCounital or NotInvertible.
  QuasiHopfTwist(HopfCochain<Host> f, std::optional<ModuleAlgebra<Host>> a = std::nullopt)
      : f_(std::move(f)), phi_(hopf_coboundary(f_)), module_(std::move(a)) {
    if (f_.arity() != 2) raise(ErrorKind::ArityMismatch, "twist must be a 2-cochain");
    if (!is_counital(f_.value())) raise(ErrorKind::NotCounital, "twist is not counital");
    if (module_) build_twisted_algebra();
  }

  const HopfCochain<Host>& twist() const noexcept { return f_; }
  const HopfCochain<Host>& coassociator() const noexcept { return phi_; }
  const Host& host() const noexcept { return f_.host(); }
  const std::optional<ModuleAlgebra<Host>>& module() const noexcept { return module_; }
  /// A_F (present iff a module algebra was given).
  const std::optional<AlgebraPresentation>& twisted_algebra() const noexcept { return twisted_; }

  Tensor delta_f(Key a) const { return f_.value() * Tensor::iterated_coproduct(host(), a, 2) * f_.inverse(); }

  /// Faces of the deformed coproduct: Δ_{F,i}(x) = F_{i,i+1} Δ_i(x) F⁻¹_{i,i+1}
  /// for 1 <= i <= n; the outer faces are unchanged.
  Tensor deformed_face(const Tensor& x, int i) const {
    const int n = x.arity();
    if (i == 0 || i == n + 1) return x.face(i);
    return f_.value().leg_embed({i, i + 1}, n + 1) * x.coproduct_leg(i) * f_.inverse().leg_embed({i, i + 1}, n + 1);
  }

  FaceMap<Host> deformed_faces() const {
    return [this](const Tensor& x, int i) { return deformed_face(x, i); };
  }

 private:
  void build_twisted_algebra() {
    const ModuleAlgebra<Host>& m = *module_;
    const auto d = static_cast<std::uint32_t>(m.algebra.dim());
    AlgebraPresentation t;
    t.name = m.algebra.name + "_F";
    t.basis = m.algebra.basis;
    t.unit = m.algebra.unit;
    t.mult.resize(static_cast<std::size_t>(d) * d);
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        try {
          t.mult[i * d + j] = m.algebra.multiply_flat(m.act(f_.inverse(), {i, j}));
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::WindowOverflow) throw;
        }
      }
    }
    t.assoc = Assoc::Quasi;
    t.associator.resize(static_cast<std::size_t>(d) * d * d);
    for (std::uint32_t i = 0; i < d; ++i) {
      for (std::uint32_t j = 0; j < d; ++j) {
        for (std::uint32_t k = 0; k < d; ++k) t.associator[flat3(i, j, k, d)] = m.act(phi_.value(), {i, j, k});
      }
    }
    twisted_ = std::move(t);
  }

  HopfCochain<Host> f_;
  HopfCochain<Host> phi_;
  std::optional<ModuleAlgebra<Host>> module_;
  std::optional<AlgebraPresentation> twisted_;
};

/// (id⊗Δ_F)Δ_F(h) = Φ_F (Δ_F⊗id)Δ_F(h) Φ_F⁻¹ on generators; quasi-
/// associativity of A_F and the twisted module-algebra law when A is given;
/// ∂_FΦ_F = 1^{⊗4}; the pentagon Φ_{234} Δ_{F,2}(Φ) Φ_{123} =
/// Δ_{F,3}(Φ) Δ_{F,1}(Φ); and the triangle (counitality of Φ_F).
template <class Host>
Report verify_quasi(const QuasiHopfTwist<Host>& t, bool with_algebra = true) {
  using Tensor = LegTensor<Host>;
  const Host& host = t.host();
  const Tensor& phi = t.coassociator().value();
  const Tensor& phi_inv = t.coassociator().inverse();
  Report r;
  r.name = "twist";
  Tally conj;
  for (auto a : host.generators()) {
    const Tensor df = t.delta_f(a);
    const Tensor left = t.deformed_face(df, 2);
    const Tensor right = phi * t.deformed_face(df, 1) * phi_inv;
    conj.record(left.residual_terms(right), host.label(a));
  }
  conj.into(r, "coassociator-conjugation");

  const auto dphi = coboundary_with(t.coassociator(), t.deformed_faces());
  const Tensor one4 = Tensor::one(host, 4);
  const std::size_t dres = dphi.value().residual_terms(one4);
  r.add("dF-PhiF", dres, dres ? dphi.value().str(4) : "", 1);
  const Tensor pent_l = phi.face(0) * t.deformed_face(phi, 2) * phi.face(4);
  const Tensor pent_r = t.deformed_face(phi, 3) * t.deformed_face(phi, 1);
  r.add("pentagon", pent_l.residual_terms(pent_r), "", 1);
  std::size_t tri = 0;
  const Tensor one2 = Tensor::one(host, 2);
  for (int i = 1; i <= 3; ++i) tri += phi.counit_leg(i).residual_terms(one2);
  r.add("triangle", tri, "", 3);

  if (with_algebra && t.twisted_algebra()) {
    const AlgebraPresentation& a = *t.twisted_algebra();
    r.append(verify_algebra(a), "A_F:");
    // h ∘ m_F = m_F ∘ Δ_F h
    const auto& m = *t.module();
    const auto d = static_cast<std::uint32_t>(a.dim());
    Tally mod;
    for (auto h : host.generators()) {
      const Tensor df = t.delta_f(h);
      for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) {
          try {
            SparseVec lhs;
            for (const auto& [k, c] : a.product(i, j)) lhs = axpy(lhs, c, m.action(h, k));
            const SparseVec rhs = a.multiply_flat(m.act(df, {i, j}));
            mod.record(axpy(lhs, Scalar(-1), rhs).size(), host.label(h) + "," + a.basis[i] + "," + a.basis[j]);
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::WindowOverflow) throw;
          }
        }
      }
    }
    mod.into(r, "A_F:module-algebra");
  }
  return r;
}

/// Verdict of the equivariance test: Φ_F commutes with Δ_F^{(3)}(a) for
/// every generator a, cross-checked with the invariance in H of
/// (∂₋F⁻¹)(∂₊F) under Δ^{(3)}.
struct EquivariantVerdict {
  bool equivariant = false;
  std::size_t phi_residual = 0;
  std::size_t fakecob_residual = 0;
  std::string witness;
};

template <class Host>
EquivariantVerdict equivariant_twist_check(const QuasiHopfTwist<Host>& t) {
  using Tensor = LegTensor<Host>;
  const Host& host = t.host();
  const auto& f = t.twist();
  const Tensor& phi = t.coassociator().value();
  const Tensor e = f.inverse().face(1) * f.inverse().face(3) * f.value().face(0) * f.value().face(2);
  EquivariantVerdict v;
  for (auto a : host.generators()) {
    const Tensor d3f = t.deformed_face(t.delta_f(a), 1);
    const Tensor d3 = Tensor::iterated_coproduct(host, a, 3);
    const std::size_t rp = (phi * d3f).residual_terms(d3f * phi);
    if (rp && v.witness.empty()) v.witness = host.label(a);
    v.phi_residual += rp;
    v.fakecob_residual += (e * d3).residual_terms(d3 * e);
  }
  v.equivariant = v.phi_residual == 0;
  return v;
}

// Seeded sampling of cochains on finite hosts.

/// Invertible element of H: sparse random rational combination (resampled
/// until invertible). On diagonal hosts every delta function gets a nonzero value.
LegTensor<FiniteHost> random_invertible(const FiniteHost& h, int arity, std::mt19937_64& rng, int terms = 3);
/// Counital 2-cochain 1⊗1 + Σ_k ħ^k N_k with each N_k a combination of
/// (a - ε(a)1)⊗(b - ε(b)1) terms, at the given ħ-order. On diagonal hosts
/// an exact order-0 random function with F(e,·) = F(·,e) = 1 is used instead.
LegTensor<FiniteHost> random_counital_twist(const FiniteHost& h, std::mt19937_64& rng, int order);
/// Invariant invertible 2-cochain: random on commutative hosts; on a group
/// algebra c·1⊗1 plus `orbit_count` random multiples of orbit sums of basis
/// pairs under simultaneous conjugation.
LegTensor<FiniteHost> random_invariant_2cochain(const FiniteHost& h, std::mt19937_64& rng, int orbit_count = 1);
/// Sums over conjugacy classes of a group algebra (a basis of the center).
std::vector<SparseVec> class_sums(const FiniteHost& h);

}  // namespace hopfq

namespace hopfq {

/// k^G acting on kG by δ_g ▷ h = [g = h] h.
ModuleAlgebra<FiniteHost> grading_module(const FiniteHost& dual_host, const FiniteGroup& g);
/// kG acting on itself by conjugation.
ModuleAlgebra<FiniteHost> adjoint_module(const FiniteHost& host, const FiniteGroup& g);
/// Σ F(a,b) δ_a ⊗ δ_b in k^G ⊗ k^G.
LegTensor<FiniteHost> cochain_tensor(const FiniteHost& dual_host, const GroupCochain& f);

/// Grouplikes a, b, c with ab = cba and c central in the Pauli group
/// (a = s1, b = s2, c = -1): ∂²(a⊗b) = 1⊗c⊗c⊗1 ≠ 1^{⊗4}.
Report pauli_grouplike_example();

/// Seeded battery over kS3, kD4, k^{S3}, k^{Z2^3}: ∂² = 1 on invertible
/// 1-cochains and invariant 2-cochains, agreement with the closed forms,
/// the twist identities for counital 2-cochains, gauge covariance, the
/// module twist of k^G against k_F G (octonions included), and the Pauli example.
Report hopf_cochain_suite(std::uint64_t seed, int samples = 20);

}  // namespace hopfq
