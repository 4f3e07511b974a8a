#include <gtest/gtest.h>

#include <random>

#include "hopfq/constructors.hpp"
#include "hopfq/error.hpp"
#include "hopfq/hopf_cochain.hpp"

using namespace hopfq;

namespace {

using Tensor = LegTensor<FiniteHost>;
using Cochain = HopfCochain<FiniteHost>;

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::Pass) << r.name << ": " << c.id << " residual " << c.residual_terms << " at "
                                      << c.witness;
  }
}

}  // namespace

TEST(HopfCochain, CoboundaryOfOneIsOne) {
  const FiniteHost h(group_algebra(symmetric_group_s3()));
  for (int n = 1; n <= 3; ++n) {
    const auto d = hopf_coboundary(Cochain::one(h, n));
    EXPECT_EQ(d.value(), Tensor::one(h, n + 1));
    EXPECT_EQ(d.inverse(), Tensor::one(h, n + 1));
  }
}

TEST(HopfCochain, GrouplikeOneCochain) {
  // ∂g = (g⊗g)Δ(g⁻¹) = 1 for grouplike g
  const FiniteGroup g = dihedral_group_d4();
  const FiniteHost h(group_algebra(g));
  const Cochain x(Tensor::basis(h, {g.find("r")}));
  EXPECT_EQ(hopf_coboundary(x).value(), Tensor::one(h, 2));
}

TEST(HopfCochain, InverseIsTwoSided) {
  const FiniteHost h(group_algebra(symmetric_group_s3()));
  std::mt19937_64 rng(7);
  const Cochain f(random_counital_twist(h, rng, 2));
  const auto d = hopf_coboundary(f);
  EXPECT_EQ(d.value() * d.inverse(), Tensor::one(h, 3));
  EXPECT_EQ(d.inverse() * d.value(), Tensor::one(h, 3));
  EXPECT_TRUE(is_counital(f.value()));
  EXPECT_TRUE(is_counital(d.value()));
}

TEST(HopfCochain, ClosedFormsOnTaft) {
  const FiniteHost h(taft(3, Cyclotomic::root_of_unity(1, 3)));
  std::mt19937_64 rng(3);
  const Cochain g(random_invertible(h, 1, rng));
  EXPECT_EQ(hopf_coboundary(g).value(), hopf_coboundary_closed(g));
  EXPECT_EQ(dsquared(g), Tensor::one(h, 3));
  const Cochain f(random_counital_twist(h, rng, 2));
  EXPECT_EQ(hopf_coboundary(f).value(), hopf_coboundary_closed(f));
  const auto phi = hopf_coboundary(f);
  EXPECT_EQ(hopf_coboundary(phi).value(), hopf_coboundary_closed(phi));
}

TEST(HopfCochain, NonInvariantTwoCochainCanFail) {
  const Report r = pauli_grouplike_example();
  expect_all_pass(r);
  EXPECT_EQ(r.checks.size(), 4u);
}

TEST(Twist, TrivialTwist) {
  const FiniteHost h(group_algebra(symmetric_group_s3()));
  const QuasiHopfTwist<FiniteHost> t(Cochain::one(h, 2));
  EXPECT_EQ(t.coassociator().value(), Tensor::one(h, 3));
  for (auto a : h.generators()) EXPECT_EQ(t.delta_f(a), Tensor::iterated_coproduct(h, a, 2));
  expect_all_pass(verify_quasi(t));
  EXPECT_TRUE(equivariant_twist_check(t).equivariant);
}

TEST(Twist, RejectsNonCounital) {
  const FiniteGroup g = symmetric_group_s3();
  const FiniteHost h(group_algebra(g));
  const Tensor f = Tensor::one(h, 2).scaled(Scalar(2)) + Tensor::basis(h, {g.find("(12)"), g.identity()});
  try {
    const QuasiHopfTwist<FiniteHost> t{Cochain(f)};
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCounital);
  }
}

TEST(Twist, NonCocycleOnCommutativeHost) {
  // a non-cocycle F on a commutative host: Φ_F ≠ 1 but all identities hold
  const FiniteHost h(dual_group_hopf(symmetric_group_s3()));
  std::mt19937_64 rng(5);
  const QuasiHopfTwist<FiniteHost> t{Cochain(random_counital_twist(h, rng, 0))};
  EXPECT_NE(t.coassociator().value(), Tensor::one(h, 3));
  expect_all_pass(verify_quasi(t));
  EXPECT_TRUE(equivariant_twist_check(t).equivariant);
}

TEST(Twist, NoncommutativeHostNotEquivariant) {
  const FiniteHost h(group_algebra(symmetric_group_s3()));
  std::mt19937_64 rng(11);
  const QuasiHopfTwist<FiniteHost> t{Cochain(random_counital_twist(h, rng, 2))};
  const EquivariantVerdict v = equivariant_twist_check(t);
  EXPECT_FALSE(v.equivariant);
  EXPECT_NE(v.fakecob_residual, 0u);
  EXPECT_FALSE(v.witness.empty());
}

TEST(Twist, ModuleAlgebras) {
  const FiniteGroup g = symmetric_group_s3();
  const FiniteHost h(group_algebra(g));
  expect_all_pass(verify_module_algebra(adjoint_module(h, g)));
  const FiniteHost dual(dual_group_hopf(g));
  expect_all_pass(verify_module_algebra(grading_module(dual, g)));
}

TEST(Twist, ClassSums) {
  const FiniteHost h(group_algebra(symmetric_group_s3()));
  const auto sums = class_sums(h);
  ASSERT_EQ(sums.size(), 3u);
  std::size_t total = 0;
  for (const auto& s : sums) total += s.size();
  EXPECT_EQ(total, 6u);
  std::mt19937_64 rng(2);
  EXPECT_TRUE(is_invariant(random_invariant_2cochain(h, rng)));
}

TEST(Suite, HopfCochain) {
  const Report r = hopf_cochain_suite(1, 3);
  expect_all_pass(r);
  EXPECT_GT(r.checks.size(), 20u);
}
