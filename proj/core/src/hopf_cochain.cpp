#include "hopfq/hopf_cochain.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

#include "hopfq/constructors.hpp"

namespace hopfq {

namespace {

Scalar random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> den(1, 3);
  std::bernoulli_distribution sign(0.5);
  const int n = num(rng);
  return Scalar(Rational(sign(rng) ? n : -n, den(rng)));
}

std::uint64_t power(std::uint64_t d, int n) {
  std::uint64_t t = 1;
  for (int i = 0; i < n; ++i) t *= d;
  return t;
}

MultiKey unflat_key(std::uint64_t t, std::uint32_t d, int arity) {
  MultiKey k{};
  for (int l = arity - 1; l >= 0; --l) {
    k[l] = static_cast<std::uint32_t>(t % d);
    t /= d;
  }
  return k;
}

// Host element a - ε(a)1.
SparseVec augmented(const FiniteHost& h, FiniteHost::Key a) {
  return axpy(SparseVec{{a, Scalar(1)}}, -h.counit(a), h.unit());
}

LegTensor<FiniteHost> tensor2(const FiniteHost& h, const SparseVec& x, const SparseVec& y) {
  using T = LegTensor<FiniteHost>;
  return T::from_element(h, x).tensor(T::from_element(h, y));
}

}  // namespace

std::vector<SparseVec> class_sums(const FiniteHost& h) {
  if (!h.grouplike()) raise(ErrorKind::SchemaError, "class sums need a group algebra");
  const auto d = static_cast<std::uint32_t>(h.dim());
  std::vector<bool> seen(d, false);
  std::vector<SparseVec> out;
  for (std::uint32_t a = 0; a < d; ++a) {
    if (seen[a]) continue;
    std::set<std::uint32_t> cls;
    for (std::uint32_t b = 0; b < d; ++b) {
      const auto ba = h.multiply(b, a)[0].first;
      cls.insert(h.multiply(ba, h.inverse_key(b))[0].first);
    }
    SparseVec v;
    for (auto c : cls) {
      seen[c] = true;
      v.emplace_back(c, Scalar(1));
    }
    out.push_back(std::move(v));
  }
  return out;
}

LegTensor<FiniteHost> random_invertible(const FiniteHost& h, int arity, std::mt19937_64& rng, int terms) {
  using T = LegTensor<FiniteHost>;
  const auto d = static_cast<std::uint32_t>(h.dim());
  const std::uint64_t total = power(d, arity);
  if (h.diagonal()) {
    T::Entries e;
    for (std::uint64_t t = 0; t < total; ++t) e.emplace_back(unflat_key(t, d, arity), random_rational(rng));
    return T::from_entries(h, arity, std::move(e));
  }
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  for (;;) {
    T x = T::one(h, arity).scaled(random_rational(rng));
    for (int i = 0; i < terms; ++i) {
      T::Entries e{{unflat_key(pick(rng), d, arity), random_rational(rng)}};
      x = x + T::from_entries(h, arity, std::move(e));
    }
    if (!x.is_zero() && x.try_invert()) return x;
  }
}

LegTensor<FiniteHost> random_counital_twist(const FiniteHost& h, std::mt19937_64& rng, int order) {
  using T = LegTensor<FiniteHost>;
  const auto d = static_cast<std::uint32_t>(h.dim());
  if (h.diagonal()) {
    // F(g,h) = 1 whenever g or h is the unit, i.e. ε(δ_g) = 1.
    T::Entries e;
    for (std::uint32_t a = 0; a < d; ++a) {
      for (std::uint32_t b = 0; b < d; ++b) {
        const bool edge = h.counit(a).is_one() || h.counit(b).is_one();
        e.emplace_back(MultiKey{a, b}, edge ? Scalar(1) : random_rational(rng));
      }
    }
    return T::from_entries(h, 2, std::move(e));
  }
  std::uniform_int_distribution<std::uint32_t> pick(0, d - 1);
  const Scalar hbar = Scalar::hbar(order);
  T f = T::one(h, 2);
  Scalar hk = Scalar(1);
  for (int k = 1; k <= order; ++k) {
    hk = hk * hbar;
    for (int i = 0; i < 2; ++i) {
      SparseVec x;
      SparseVec y;
      while (x.empty()) x = augmented(h, pick(rng));
      while (y.empty()) y = augmented(h, pick(rng));
      f = f + tensor2(h, x, y).scaled(hk * random_rational(rng));
    }
  }
  return f;
}

LegTensor<FiniteHost> random_invariant_2cochain(const FiniteHost& h, std::mt19937_64& rng, int orbit_count) {
  using T = LegTensor<FiniteHost>;
  if (h.presentation().commutative) return random_invertible(h, 2, rng, 3);
  if (!h.grouplike()) raise(ErrorKind::SchemaError, "invariant sampling needs a group algebra");
  // orbits of basis pairs under simultaneous conjugation span the invariants
  const auto d = static_cast<std::uint32_t>(h.dim());
  auto conj = [&](std::uint32_t g, std::uint32_t a) {
    return h.multiply(h.multiply(g, a)[0].first, h.inverse_key(g))[0].first;
  };
  std::vector<std::set<std::pair<std::uint32_t, std::uint32_t>>> orbits;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  const std::uint32_t e = h.unit()[0].first;
  for (std::uint32_t a = 0; a < d; ++a) {
    for (std::uint32_t b = 0; b < d; ++b) {
      if ((a == e && b == e) || seen.count({a, b}) != 0) continue;
      std::set<std::pair<std::uint32_t, std::uint32_t>> orbit;
      for (std::uint32_t g = 0; g < d; ++g) orbit.insert({conj(g, a), conj(g, b)});
      seen.insert(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, orbits.size() - 1);
  for (;;) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> acc;
    acc[{e, e}] = random_rational(rng);
    for (int i = 0; i < orbit_count; ++i) {
      const Scalar c = random_rational(rng);
      for (const auto& ab : orbits[pick(rng)]) acc[ab] += c;
    }
    T::Entries entries;
    for (const auto& [ab, c] : acc) entries.emplace_back(MultiKey{ab.first, ab.second}, c);
    T x = T::from_entries(h, 2, std::move(entries));
    if (x.try_invert()) return x;
  }
}

ModuleAlgebra<FiniteHost> grading_module(const FiniteHost& dual_host, const FiniteGroup& g) {
  ModuleAlgebra<FiniteHost> m;
  m.host = &dual_host;
  m.algebra = group_algebra(g).algebra;
  m.action = [](FiniteHost::Key d, std::uint32_t a) { return d == a ? SparseVec{{a, Scalar(1)}} : SparseVec{}; };
  return m;
}

ModuleAlgebra<FiniteHost> adjoint_module(const FiniteHost& host, const FiniteGroup& g) {
  ModuleAlgebra<FiniteHost> m;
  m.host = &host;
  m.algebra = group_algebra(g).algebra;
  m.action = [g](FiniteHost::Key h, std::uint32_t a) {
    return SparseVec{{g.mul(g.mul(h, a), g.inverse(h)), Scalar(1)}};
  };
  return m;
}

LegTensor<FiniteHost> cochain_tensor(const FiniteHost& dual_host, const GroupCochain& f) {
  using T = LegTensor<FiniteHost>;
  T::Entries e;
  for (std::size_t t = 0; t < f.table().size(); ++t) {
    const auto args = f.unflat(t);
    MultiKey k{};
    for (std::size_t l = 0; l < args.size(); ++l) k[l] = args[l];
    e.emplace_back(k, f.table()[t]);
  }
  return T::from_entries(dual_host, f.arity(), std::move(e));
}

Report pauli_grouplike_example() {
  using T = LegTensor<FiniteHost>;
  const FiniteGroup p = pauli_group();
  const FiniteHost host(group_algebra(p));
  const auto a = p.find("s1");
  const auto b = p.find("s2");
  const auto c = p.find("-1");
  const auto e = p.identity();
  Report r;
  r.name = "pauli";
  r.add("ab=cba", p.mul(a, b) == p.mul(c, p.mul(b, a)) ? 0 : 1, "", 1);
  const T d2 = dsquared(HopfCochain<FiniteHost>(T::basis(host, {a, b})));
  r.add("dsquared(a⊗b)=1⊗c⊗c⊗1", d2.residual_terms(T::basis(host, {e, c, c, e})), d2.str(), 1);
  r.add_expect_nonzero("dsquared(a⊗b)≠1", d2.residual_terms(T::one(host, 4)), d2.str());
  r.add_expect_nonzero("a⊗b-not-invariant", invariance_residual(T::basis(host, {a, b})));
  return r;
}

namespace {

using Tensor = LegTensor<FiniteHost>;
using Cochain = HopfCochain<FiniteHost>;

struct Tallies {
  std::map<std::string, Tally> by_id;
  std::vector<std::string> order;

  Tally& operator[](const std::string& id) {
    if (!by_id.count(id)) order.push_back(id);
    return by_id[id];
  }
  void absorb(const Report& r, const std::string& where) {
    for (const auto& c : r.checks) {
      Tally& t = (*this)[c.id];
      t.record(c.residual_terms, where + (c.witness.empty() ? "" : ":" + c.witness));
    }
  }
  void into(Report& r) const {
    for (const auto& id : order) by_id.at(id).into(r, id);
  }
};

std::size_t presentation_residual(const AlgebraPresentation& x, const AlgebraPresentation& y, std::string& witness) {
  const auto d = static_cast<std::uint32_t>(x.dim());
  std::size_t res = 0;
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      const std::size_t t = axpy(x.product(i, j), Scalar(-1), y.product(i, j)).size();
      if (t && !res) witness = x.basis[i] + "*" + x.basis[j];
      res += t;
    }
  }
  for (std::uint32_t t = 0; t < d * d * d; ++t) {
    const std::size_t s = axpy(x.associator[t], Scalar(-1), y.associator[t]).size();
    if (s && !res) witness = "associator " + flat_label(x.basis, t, 3);
    res += s;
  }
  return res;
}

// k^G twisted by F⁻¹ on the grading module against k_F G.
void module_cross_check(Report& r, const std::string& id, const FiniteGroup& g, const GroupCochain& f,
                        const AlgebraPresentation& reference) {
  const FiniteHost dual(dual_group_hopf(g));
  const Cochain fm(cochain_tensor(dual, f.inverse()), cochain_tensor(dual, f));
  const QuasiHopfTwist<FiniteHost> t(fm, grading_module(dual, g));
  std::string w;
  r.add(id + ":A_F=k_FG", presentation_residual(*t.twisted_algebra(), reference, w), w, 1);
  const Report q = verify_quasi(t);
  for (const auto& c : q.checks) r.add(id + ":" + c.id, c.residual_terms, c.witness, c.cases);
}

}  // namespace

Report hopf_cochain_suite(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  Report r;
  r.name = "hopf-cochain";
  r.seed = seed;

  const FiniteGroup s3 = symmetric_group_s3();
  const FiniteGroup d4 = dihedral_group_d4();
  const FiniteGroup z2c = z2_cubed();
  std::vector<std::unique_ptr<FiniteHost>> hosts;
  hosts.push_back(std::make_unique<FiniteHost>(group_algebra(s3)));
  hosts.push_back(std::make_unique<FiniteHost>(group_algebra(d4)));
  hosts.push_back(std::make_unique<FiniteHost>(dual_group_hopf(s3)));
  hosts.push_back(std::make_unique<FiniteHost>(dual_group_hopf(z2c)));

  Tallies tl;
  for (const auto& hp : hosts) {
    const FiniteHost& h = *hp;
    const std::string& hn = h.name();
    for (int s = 0; s < samples; ++s) {
      const std::string where = hn + "#" + std::to_string(s);
      const Cochain g(random_invertible(h, 1, rng, 1));
      tl["dsquared-1-cochains"].record(dsquared(g).residual_terms(Tensor::one(h, 3)), where);
      tl["closed-form-n1"].record(hopf_coboundary(g).value().residual_terms(hopf_coboundary_closed(g)), where);

      const Cochain inv(random_invariant_2cochain(h, rng, s < 2 ? 2 : 1));
      tl["invariant-precondition"].record(invariance_residual(inv.value()), where);
      const Cochain dinv = hopf_coboundary(inv);
      tl["coboundary-preserves-invariance"].record(invariance_residual(dinv.value()), where);
      tl["dsquared-invariant-2-cochains"].record(hopf_coboundary(dinv).value().residual_terms(Tensor::one(h, 4)),
                                                 where);

      const Cochain f(random_counital_twist(h, rng, 2));
      tl["closed-form-n2"].record(hopf_coboundary(f).value().residual_terms(hopf_coboundary_closed(f)), where);
      const QuasiHopfTwist<FiniteHost> tw(f);
      tl["closed-form-n3"].record(
          hopf_coboundary(tw.coassociator()).value().residual_terms(hopf_coboundary_closed(tw.coassociator())),
          where);
      tl.absorb(verify_quasi(tw), where);
      const EquivariantVerdict v = equivariant_twist_check(tw);
      tl["equivariance-criteria-agree"].record((v.phi_residual == 0) == (v.fakecob_residual == 0) ? 0 : 1, where);

      // ∂α_g(F) = Ad_{g⊗g⊗g} ∂F
      const Tensor ggg = g.value().tensor(g.value()).tensor(g.value());
      const Tensor iii = g.inverse().tensor(g.inverse()).tensor(g.inverse());
      const Tensor lhs = hopf_coboundary(gauge_act(g, f)).value();
      tl["gauge-covariance"].record(lhs.residual_terms(ggg * tw.coassociator().value() * iii), where);
    }
  }
  tl.into(r);

  // Module twists of k^G against twisted group algebras.
  const Octonions o = fano_octonions();
  module_cross_check(r, "octonions", o.group, o.twist, o.algebra.algebra);
  const FiniteGroup k4 = klein_four();
  const GroupCochain fk = GroupCochain::from_function(k4, 2, [&](const GroupCochain::Args& x) {
    if (x[0] == k4.identity() || x[1] == k4.identity()) return Scalar(1);
    return random_rational(rng);
  });
  module_cross_check(r, "klein-four", k4, fk, twisted_group_algebra(k4, fk).algebra);

  // Noncommutative host on a module algebra: kS3 acting on itself by conjugation.
  const FiniteHost ks3(group_algebra(s3));
  const Cochain f(random_counital_twist(ks3, rng, 2));
  const QuasiHopfTwist<FiniteHost> tw(f, adjoint_module(ks3, s3));
  const Report q = verify_quasi(tw);
  for (const auto& c : q.checks) {
    if (c.id.rfind("A_F:", 0) == 0) r.add("adjoint-S3:" + c.id, c.residual_terms, c.witness, c.cases);
  }
  // a ↦ g ▷ a is an algebra map A_F -> A_{α_g(F)}
  Tensor gt = random_invertible(ks3, 1, rng);
  gt = gt.scaled(series_invert(gt.counit_leg(1).coeff(MultiKey{})));
  const Cochain g(gt);
  const QuasiHopfTwist<FiniteHost> tg(gauge_act(g, f), adjoint_module(ks3, s3));
  const auto& m = *tw.module();
  const AlgebraPresentation& af = *tw.twisted_algebra();
  const AlgebraPresentation& ag = *tg.twisted_algebra();
  Tally iso;
  for (std::uint32_t a = 0; a < af.dim(); ++a) {
    for (std::uint32_t b = 0; b < af.dim(); ++b) {
      SparseVec lhs;
      for (const auto& [k, c] : af.product(a, b)) lhs = axpy(lhs, c, m.act(g.value(), {k}));
      const SparseVec rhs = ag.multiply(m.act(g.value(), {a}), m.act(g.value(), {b}));
      iso.record(axpy(lhs, Scalar(-1), rhs).size(), af.basis[a] + "," + af.basis[b]);
    }
  }
  iso.into(r, "gauge-isomorphism");

  r.append(pauli_grouplike_example(), "pauli:");
  return r;
}

}  // namespace hopfq
