#include <gtest/gtest.h>

#include "hopfq/error.hpp"
#include "hopfq/hopf_cochain.hpp"
#include "hopfq/pbw.hpp"

using namespace hopfq;

namespace {

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::Pass) << r.name << ": " << c.id << " residual " << c.residual_terms << " at "
                                      << c.witness;
  }
}

}  // namespace

TEST(Pbw, NormalOrdering) {
  for (int kappa : {1, -1, 0}) {
    const PbwHost h(kappa);
    const PbwTensor x = pbw_monomial(h, 1, 0, 0);
    const PbwTensor y = pbw_monomial(h, 0, 1, 0);
    const PbwTensor t = pbw_monomial(h, 0, 0, 1);
    EXPECT_EQ(pbw_mul(y, x), pbw_monomial(h, 1, 1, 0) - t.scaled(Scalar(kappa)));
    EXPECT_EQ(pbw_mul(t, x), pbw_monomial(h, 1, 0, 1));
    // [X,Y] = κT
    EXPECT_EQ(x * y - y * x, t.scaled(Scalar(kappa)));
  }
  const PbwHost h(1);
  // Y²X² = X²Y² - 4XYT + 2T²
  const PbwTensor yyxx = pbw_monomial(h, 0, 2, 0) * pbw_monomial(h, 2, 0, 0);
  EXPECT_EQ(yyxx, pbw_monomial(h, 2, 2, 0) - pbw_monomial(h, 1, 1, 1, Scalar(4)) + pbw_monomial(h, 0, 0, 2, Scalar(2)));
}

TEST(Pbw, DegreeGuard) {
  try {
    (void)PbwHost::key(PbwHost::kMaxExponent + 1, 0, 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeGuard);
  }
}

TEST(Pbw, Exponential) {
  const PbwHost h(-1);
  const Scalar hb = Scalar::hbar(4);
  EXPECT_EQ(pbw_exp(PbwTensor(h, 1)), PbwTensor::one(h, 1));
  const PbwTensor e = pbw_exp(pbw_monomial(h, 1, 0, 0, hb));
  const PbwTensor ei = pbw_exp(pbw_monomial(h, 1, 0, 0, -hb));
  EXPECT_EQ(e * ei, PbwTensor::one(h, 1));
  EXPECT_EQ(e.size(), 5u);
  try {
    (void)pbw_exp(pbw_monomial(h, 1, 0, 0));
    ADD_FAILURE();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotFormallyNilpotent);
  }
}

TEST(Pbw, Bch) {
  for (int kappa : {1, -1}) {
    const PbwHost h(kappa);
    for (int k = 2; k <= 6; ++k) EXPECT_TRUE(bch_residual(h, k).is_zero()) << kappa << " " << k;
  }
}

TEST(Pbw, HeisenbergCounterexample) {
  const PbwHost h(1);
  for (int k : {2, 4}) {
    const auto [lhs, rhs] = heisenberg_counterexample(h, k);
    EXPECT_EQ(lhs, rhs);
    EXPECT_NE(lhs, PbwTensor::one(h, 4));
  }
  const PbwHost flat(0);
  const auto [lhs, rhs] = heisenberg_counterexample(flat, 3);
  EXPECT_EQ(lhs, PbwTensor::one(flat, 4));
}

TEST(Pbw, GclIdentity) {
  const PbwHost h(-1);
  for (int s = 0; s < 3; ++s) {
    const Scalar th = random_theta(2 * s + 1, 3);
    const Scalar th2 = random_theta(2 * s + 2, 3);
    EXPECT_TRUE(gcl_identity_residual(h, th, th2).is_zero());
  }
  // the opposite bracket breaks the identity
  EXPECT_FALSE(gcl_identity_residual(PbwHost(1), random_theta(1, 3), random_theta(2, 3)).is_zero());
  // and so does dropping Φ
  const Scalar th = random_theta(9, 3);
  const PbwTensor fi = f_theta(h, -th);
  const PbwTensor lhs = fi.coproduct_leg(1) * fi.leg_embed({1, 2}, 3);
  const PbwTensor rhs = fi.coproduct_leg(2) * fi.leg_embed({2, 3}, 3);
  EXPECT_FALSE((lhs - rhs).is_zero());
}

TEST(Pbw, CoassociatorIsCoboundaryOfTwist) {
  const PbwHost h(-1);
  const Scalar th = random_theta(4, 3);
  const HopfCochain<PbwHost> f(f_theta(h, th), f_theta(h, -th));
  EXPECT_EQ(hopf_coboundary(f).value(), gcl_coassociator(h, th, th));
  EXPECT_EQ(gcl_coassociator(h, Scalar(0), Scalar(0)), PbwTensor::one(h, 3));
}

TEST(Pbw, Moyal) {
  for (int k : {3, 5}) expect_all_pass(moyal_suite(k));
}

TEST(Suite, PbwGcl) { expect_all_pass(pbw_gcl_suite(1, 4)); }
