#include "hopfq/pbw.hpp"

#include <random>

#include "hopfq/hopf_cochain.hpp"

namespace hopfq {

namespace {

const Scalar kOne(1);
const Scalar kZero;

long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Scalar i_unit() { return Scalar(Cyclotomic::root_of_unity(1, 4)); }

}  // namespace

PbwHost::PbwHost(int kappa) : kappa_(kappa), unit_{{key(0, 0, 0), Scalar(1)}} {}

PbwHost::Key PbwHost::key(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) raise(ErrorKind::DegreeGuard, "negative PBW exponent");
  if (a > kMaxExponent || b > kMaxExponent || c > kMaxExponent) {
    raise(ErrorKind::DegreeGuard, "PBW exponent exceeds " + std::to_string(kMaxExponent));
  }
  return static_cast<Key>(a) << 20 | static_cast<Key>(b) << 10 | static_cast<Key>(c);
}

std::string PbwHost::name() const { return "U(h3)[κ=" + std::to_string(kappa_) + "]"; }

PbwHost::Key PbwHost::inverse_key(Key) const {
  raise(ErrorKind::NotInvertible, "PBW monomials are not grouplike");
}

const SparseVec& PbwHost::multiply(Key p, Key q) const {
  const std::uint64_t id = static_cast<std::uint64_t>(p) << 32 | q;
  std::lock_guard<std::mutex> lock(mu_);
  auto it = products_.find(id);
  if (it != products_.end()) return it->second;
  const auto [a, b, c] = exponents(p);
  const auto [d, e, f] = exponents(q);
  SparseVec out;
  long long fact = 1;
  long long sign = 1;
  for (int j = 0; j <= std::min(b, d); ++j) {
    if (j > 0) {
      fact *= j;
      sign *= -kappa_;
    }
    const long long coeff = choose(b, j) * choose(d, j) * fact * sign;
    if (coeff == 0) continue;
    out.emplace_back(key(a + d - j, b - j + e, c + f + j), Scalar(coeff));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return products_.emplace(id, std::move(out)).first->second;
}

const std::vector<CoTerm>& PbwHost::coproduct(Key k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = coproducts_.find(k);
  if (it != coproducts_.end()) return it->second;
  const auto [a, b, c] = exponents(k);
  std::vector<CoTerm> out;
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      for (int l = 0; l <= c; ++l) {
        const long long m = choose(a, i) * choose(b, j) * choose(c, l);
        out.push_back({key(i, j, l), key(a - i, b - j, c - l), Scalar(m)});
      }
    }
  }
  return coproducts_.emplace(k, std::move(out)).first->second;
}

const Scalar& PbwHost::counit(Key a) const { return a == 0 ? kOne : kZero; }

SparseVec PbwHost::antipode(Key k) const {
  const auto [a, b, c] = exponents(k);
  // T^c Y^b X^a, then normal order
  const SparseVec& yx = multiply(key(0, b, c), key(a, 0, 0));
  return scale(yx, Scalar((a + b + c) % 2 ? -1 : 1));
}

std::string PbwHost::label(Key k) const {
  const auto [a, b, c] = exponents(k);
  if (a == 0 && b == 0 && c == 0) return "1";
  std::string out;
  auto put = [&](const char* s, int e) {
    if (e == 0) return;
    out += s;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put("X", a);
  put("Y", b);
  put("T", c);
  return out;
}

PbwTensor pbw_exp(const PbwTensor& x) {
  if (x.arity() != 1) raise(ErrorKind::ArityMismatch, "pbw_exp expects an element of H");
  return tensor_exp(x);
}

PbwTensor pbw_mul(const PbwTensor& x, const PbwTensor& y) { return x * y; }

PbwTensor pbw_monomial(const PbwHost& h, int a, int b, int c, const Scalar& coeff) {
  return PbwTensor::basis(h, {PbwHost::key(a, b, c)}, coeff);
}

PbwTensor bch_residual(const PbwHost& h, int order) {
  const Scalar hb = Scalar::hbar(order);
  const PbwTensor x = pbw_monomial(h, 1, 0, 0, hb);
  const PbwTensor y = pbw_monomial(h, 0, 1, 0, hb);
  const PbwTensor lhs = pbw_exp(x) * pbw_exp(y);
  const PbwTensor z = pbw_monomial(h, 0, 0, 1, Scalar(Rational(h.kappa(), 2)) * hb * hb);
  const PbwTensor rhs = pbw_exp(z) * pbw_exp(x + y);
  return lhs - rhs;
}

std::pair<PbwTensor, PbwTensor> heisenberg_counterexample(const PbwHost& h, int order) {
  const Scalar hb = Scalar::hbar(order);
  const PbwTensor a = pbw_exp(pbw_monomial(h, 1, 0, 0, hb));
  const PbwTensor ai = pbw_exp(pbw_monomial(h, 1, 0, 0, -hb));
  const PbwTensor b = pbw_exp(pbw_monomial(h, 0, 1, 0, hb));
  const PbwTensor bi = pbw_exp(pbw_monomial(h, 0, 1, 0, -hb));
  const HopfCochain<PbwHost> ab(a.tensor(b), ai.tensor(bi));
  const PbwTensor c = pbw_exp(pbw_monomial(h, 0, 0, 1, Scalar(h.kappa()) * hb * hb));
  const PbwTensor one = PbwTensor::one(h, 1);
  return {dsquared(ab), one.tensor(c).tensor(c).tensor(one)};
}

PbwTensor f_theta(const PbwHost& h, const Scalar& theta) {
  return tensor_exp(PbwTensor::basis(h, {PbwHost::x(), PbwHost::y()}, -theta * Scalar::tau(-1)));
}

PbwTensor gcl_coassociator(const PbwHost& h, const Scalar& theta, const Scalar& theta2) {
  const PbwHost::Key e = PbwHost::key(0, 0, 0);
  const PbwTensor a = PbwTensor::basis(h, {PbwHost::x(), e, PbwHost::y()}, Scalar::tau(-1) * (theta - theta2));
  const PbwTensor b = PbwTensor::basis(h, {PbwHost::x(), PbwHost::t(), PbwHost::y()},
                                       -(Scalar::tau(-2) * theta * theta2));
  return tensor_exp(a + b);
}

PbwTensor gcl_identity_residual(const PbwHost& h, const Scalar& theta, const Scalar& theta2) {
  const PbwTensor fi = f_theta(h, -theta);
  const PbwTensor fi2 = f_theta(h, -theta2);
  const PbwTensor lhs = fi.coproduct_leg(1) * fi2.leg_embed({1, 2}, 3);
  const PbwTensor rhs = fi2.coproduct_leg(2) * fi.leg_embed({2, 3}, 3) * gcl_coassociator(h, theta, theta2);
  return lhs - rhs;
}

Scalar random_theta(std::uint64_t seed, int order) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  const Scalar hb = Scalar::hbar(order);
  Scalar theta = Scalar(0).at_order(order);
  Scalar power = hb;
  for (int k = 1; k <= order; ++k) {
    int n = num(rng);
    if (k == 1 && n == 0) n = 1;
    theta = theta + power * Scalar(Rational(n, den(rng)));
    power = power * hb;
  }
  return theta;
}

Report moyal_suite(int order) {
  const PbwHost h(0);
  const Scalar hb = Scalar::hbar(order);
  const Scalar ih = i_unit() * hb;
  const Scalar ih2 = ih * Scalar(Rational(1, 2));
  const PbwHost::Key x = PbwHost::x();
  const PbwHost::Key y = PbwHost::y();
  Report r;
  r.name = "moyal";

  const PbwTensor f = tensor_exp(PbwTensor::basis(h, {x, y}, ih));
  const PbwTensor fi = tensor_exp(PbwTensor::basis(h, {x, y}, -ih));
  const HopfCochain<PbwHost> fc(f, fi);
  const PbwTensor df = hopf_coboundary(fc).value();
  const std::size_t dres = df.residual_terms(PbwTensor::one(h, 3));
  r.add("dF=1", dres, dres ? df.str(4) : "", 1);
  r.add("F-counital", is_counital(f) ? 0 : 1, "", 1);

  const PbwTensor f2 =
      tensor_exp(PbwTensor::basis(h, {x, y}, ih2) + PbwTensor::basis(h, {y, x}, -ih2));
  const PbwHost::Key xy = PbwHost::key(1, 1, 0);
  const HopfCochain<PbwHost> g(tensor_exp(PbwTensor::basis(h, {xy}, ih2)),
                               tensor_exp(PbwTensor::basis(h, {xy}, -ih2)));
  const PbwTensor ag = gauge_act(g, fc).value();
  r.add("alpha_g(F)=F'", ag.residual_terms(f2), "", 1);
  const PbwTensor dgf = hopf_coboundary(g).value() * f;
  r.add("F'=(dg)F", dgf.residual_terms(f2), "", 1);
  const HopfCochain<PbwHost> f2c(f2, tensor_exp(-(PbwTensor::basis(h, {x, y}, ih2) + PbwTensor::basis(h, {y, x}, -ih2))));
  r.add("dF'=1", hopf_coboundary(f2c).value().residual_terms(PbwTensor::one(h, 3)), "", 1);

  const HopfCochain<PbwHost> pp(tensor_exp(PbwTensor::basis(h, {x, x}, ih)),
                                tensor_exp(PbwTensor::basis(h, {x, x}, -ih)));
  r.add("P1⊗P1-cocycle", hopf_coboundary(pp).value().residual_terms(PbwTensor::one(h, 3)), "", 1);

  // plane waves e_k, |k_j| <= 2, with P_j e_k = k_j e_k
  constexpr int w = 2;
  constexpr int side = 2 * w + 1;
  ModuleAlgebra<PbwHost> m;
  m.host = &h;
  auto idx = [](int k1, int k2) { return static_cast<std::uint32_t>((k1 + w) * side + (k2 + w)); };
  for (int k1 = -w; k1 <= w; ++k1) {
    for (int k2 = -w; k2 <= w; ++k2) m.algebra.basis.push_back("e(" + std::to_string(k1) + "," + std::to_string(k2) + ")");
  }
  m.algebra.name = "plane-waves";
  m.algebra.unit = {{idx(0, 0), Scalar(1)}};
  m.algebra.mult.resize(side * side * side * side);
  for (int a1 = -w; a1 <= w; ++a1) {
    for (int a2 = -w; a2 <= w; ++a2) {
      for (int b1 = -w; b1 <= w; ++b1) {
        for (int b2 = -w; b2 <= w; ++b2) {
          if (std::abs(a1 + b1) > w || std::abs(a2 + b2) > w) continue;
          m.algebra.mult[idx(a1, a2) * side * side + idx(b1, b2)] = SparseVec{{idx(a1 + b1, a2 + b2), Scalar(1)}};
        }
      }
    }
  }
  m.action = [](PbwHost::Key k, std::uint32_t e) {
    const auto [a, b, c] = PbwHost::exponents(k);
    if (c > 0) return SparseVec{};
    const int k1 = static_cast<int>(e) / side - w;
    const int k2 = static_cast<int>(e) % side - w;
    long long v = 1;
    for (int i = 0; i < a; ++i) v *= k1;
    for (int i = 0; i < b; ++i) v *= k2;
    return v == 0 ? SparseVec{} : SparseVec{{e, Scalar(v)}};
  };
  const Report mod = verify_module_algebra(m);
  for (const auto& c : mod.checks) r.add("A:" + c.id, c.residual_terms, c.witness, c.cases);

  const QuasiHopfTwist<PbwHost> tw(fc, m);
  Tally same;
  for (auto a : h.generators()) same.record(tw.delta_f(a).residual_terms(PbwTensor::iterated_coproduct(h, a, 2)), h.label(a));
  same.into(r, "Delta_F=Delta");
  r.add("Phi_F=1", tw.coassociator().value().residual_terms(PbwTensor::one(h, 3)), "", 1);
  r.append(verify_quasi(tw), "twist:");
  return r;
}

Report pbw_gcl_suite(std::uint64_t seed, int order) {
  Report r;
  r.name = "pbw-gcl";
  r.seed = seed;
  const PbwHost heis(1);
  const PbwHost heis_neg(-1);
  const PbwHost flat(0);

  for (const PbwHost* h : {&heis, &heis_neg}) {
    Tally bch;
    for (int k = 2; k <= 6; ++k) bch.record(bch_residual(*h, k).size(), "order " + std::to_string(k));
    bch.into(r, "bch-kappa" + std::string(h->kappa() > 0 ? "+1" : "-1"));
  }

  // associativity and Hopf bookkeeping of the normal form
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ex(0, 3);
  std::uniform_int_distribution<int> cf(-3, 3);
  for (const PbwHost* h : {&heis, &heis_neg}) {
    Tally assoc;
    auto rnd = [&] {
      PbwTensor v(*h, 1);
      for (int i = 0; i < 3; ++i) v = v + pbw_monomial(*h, ex(rng), ex(rng), ex(rng) / 2, Scalar(cf(rng)));
      return v;
    };
    for (int t = 0; t < 10; ++t) {
      const PbwTensor a = rnd();
      const PbwTensor b = rnd();
      const PbwTensor c = rnd();
      assoc.record(((a * b) * c).residual_terms(a * (b * c)), a.str(3));
    }
    assoc.into(r, "associativity-kappa" + std::string(h->kappa() > 0 ? "+1" : "-1"));
    Tally anti;
    Tally coass;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2; ++b) {
        for (int c = 0; c <= 1; ++c) {
          const PbwHost::Key k = PbwHost::key(a, b, c);
          const PbwTensor d = PbwTensor::iterated_coproduct(*h, k, 2);
          coass.record(d.coproduct_leg(1).residual_terms(d.coproduct_leg(2)), h->label(k));
          // m(S⊗id)Δ = m(id⊗S)Δ = ηε
          PbwTensor left(*h, 1);
          PbwTensor right(*h, 1);
          for (const auto& [kk, v] : d.entries()) {
            const PbwTensor s0 = PbwTensor::from_element(*h, h->antipode(kk[0]));
            const PbwTensor s1 = PbwTensor::from_element(*h, h->antipode(kk[1]));
            left = left + (s0 * PbwTensor::basis(*h, {kk[1]})).scaled(v);
            right = right + (PbwTensor::basis(*h, {kk[0]}) * s1).scaled(v);
          }
          const PbwTensor eps = PbwTensor::one(*h, 1).scaled(h->counit(k));
          anti.record(left.residual_terms(eps) + right.residual_terms(eps), h->label(k));
        }
      }
    }
    const std::string suffix = h->kappa() > 0 ? "+1" : "-1";
    coass.into(r, "coassociativity-kappa" + suffix);
    anti.into(r, "antipode-kappa" + suffix);
  }

  // ∂²(e^{ħX}⊗e^{ħY}) = 1⊗c⊗c⊗1
  for (int k : {2, order}) {
    const auto [lhs, rhs] = heisenberg_counterexample(heis, k);
    const std::size_t res = lhs.residual_terms(rhs);
    r.add("counterexample-order-" + std::to_string(k), res, res ? lhs.str(4) : "", 1);
    if (k == order) r.add_expect_nonzero("counterexample-nontrivial", lhs.residual_terms(PbwTensor::one(heis, 4)), lhs.str(4));
  }
  {
    const auto [lhs, rhs] = heisenberg_counterexample(flat, order);
    const std::size_t res = lhs.residual_terms(PbwTensor::one(flat, 4));
    r.add("counterexample-kappa0-control", res, res ? lhs.str(4) : "", 1);
  }

  // coassociator identity over seeded (θ,θ')
  for (int k = 2; k <= order; ++k) {
    Tally t;
    for (int s = 0; s < 5; ++s) {
      const Scalar th = random_theta(seed * 1000 + 10 * k + 2 * s, k);
      const Scalar th2 = random_theta(seed * 1000 + 10 * k + 2 * s + 1, k);
      t.record(gcl_identity_residual(heis_neg, th, th2).size(), "θ=" + th.str() + " θ'=" + th2.str());
    }
    t.into(r, "gcl-identity-order-" + std::to_string(k));
  }
  {
    const Scalar th = random_theta(seed + 7, order);
    const Scalar th2 = random_theta(seed + 8, order);
    r.add_expect_nonzero("gcl-identity-wrong-bracket", gcl_identity_residual(heis, th, th2).size());
  }
  r.add("gcl-trivial", gcl_coassociator(heis_neg, Scalar(0), Scalar(0)).residual_terms(PbwTensor::one(heis_neg, 3)),
        "", 1);

  const Scalar theta = random_theta(seed, order);
  const PbwTensor f = f_theta(heis_neg, theta);
  const HopfCochain<PbwHost> fc(f, f_theta(heis_neg, -theta));
  const QuasiHopfTwist<PbwHost> tw(fc);
  const PbwTensor& phi = tw.coassociator().value();
  const PbwTensor closed = tensor_exp(PbwTensor::basis(
      heis_neg, {PbwHost::x(), PbwHost::t(), PbwHost::y()}, -(Scalar::tau(-2) * theta * theta)));
  r.add("Phi_theta_theta=dF_theta", phi.residual_terms(gcl_coassociator(heis_neg, theta, theta)), "", 1);
  r.add("Phi_theta_theta=exp((θ/2π)²X⊗T⊗Y)", phi.residual_terms(closed), "", 1);
  r.add_expect_nonzero("F_theta-not-cocycle", phi.residual_terms(PbwTensor::one(heis_neg, 3)), phi.str(3));
  const EquivariantVerdict v = equivariant_twist_check(tw);
  r.add_expect_nonzero("F_theta-not-equivariant", v.phi_residual, "generator " + v.witness);
  r.add("equivariance-criteria-agree", (v.phi_residual == 0) == (v.fakecob_residual == 0) ? 0 : 1, "", 1);
  r.append(verify_quasi(tw), "twist:");
  return r;
}

}  // namespace hopfq
