#include <gtest/gtest.h>

#include "hopfq/error.hpp"
#include "hopfq/group_cohomology.hpp"
#include "hopfq/hopf_verify.hpp"

using namespace hopfq;

namespace {

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::Pass) << r.name << ": " << c.id << " residual " << c.residual_terms << " at "
                                      << c.witness;
  }
}

}  // namespace

TEST(GroupCochain, ConstantCoboundary) {
  const FiniteGroup g = symmetric_group_s3();
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(group_coboundary(GroupCochain::constant(g, n)).is_constant_one());
}

TEST(GroupCochain, CoboundaryOfTwoCochainMatchesClosedForm) {
  const FiniteGroup g = dihedral_group_d4();
  // some nowhere-zero 2-cochain
  const GroupCochain f = GroupCochain::from_function(g, 2, [](const GroupCochain::Args& x) {
    return Scalar(static_cast<long long>(x[0] * 3 + x[1] + 1));
  });
  const GroupCochain df = group_coboundary(f);
  for (GroupCochain::Elem a = 0; a < 8; ++a) {
    for (GroupCochain::Elem b = 0; b < 8; ++b) {
      for (GroupCochain::Elem c = 0; c < 8; ++c) {
        const Scalar closed = f({a, g.mul(b, c)}) * f({b, c}) / (f({a, b}) * f({g.mul(a, b), c}));
        EXPECT_EQ(df({a, b, c}), closed);
      }
    }
  }
  // ∂∂ = 1 in the abelian group of cochains
  EXPECT_TRUE(group_coboundary(df).is_constant_one());
  const GroupCochain h = GroupCochain::from_function(g, 1, [](const GroupCochain::Args& x) {
    return Scalar(static_cast<long long>(x[0] + 2));
  });
  EXPECT_TRUE(group_coboundary(group_coboundary(h)).is_constant_one());
}

TEST(GroupCochain, CocycleAndUnital) {
  const FiniteGroup g = cyclic_group(3);
  const GroupCochain one = GroupCochain::constant(g, 2);
  EXPECT_TRUE(is_cocycle(one));
  EXPECT_TRUE(is_unital(one));
  const GroupCochain c = GroupCochain::constant(g, 2, Scalar(2));
  EXPECT_TRUE(is_cocycle(c));
  EXPECT_FALSE(is_unital(c));
  try {
    (void)twisted_group_algebra(g, c);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnital);
  }
  const TwistedGroupAlgebra t = twisted_group_algebra(g, one);
  EXPECT_EQ(t.algebra.assoc, Assoc::Associative);
  expect_all_pass(verify_algebra(t.algebra));
}

TEST(Octonions, SignCochain) {
  const Octonions o = fano_octonions();
  for (FiniteGroup::Elem i = 1; i < 8; ++i) {
    EXPECT_EQ(o.twist({i, i}), Scalar(-1));
    EXPECT_EQ(o.group.mul(i, i), o.group.identity());
    EXPECT_EQ(o.twist({0, i}), Scalar(1));
    EXPECT_EQ(o.twist({i, 0}), Scalar(1));
  }
  EXPECT_FALSE(is_cocycle(o.twist));
  EXPECT_TRUE(is_unital(o.twist));
  EXPECT_FALSE(o.algebra.associator.is_constant_one());
  // e1 e2 = e3 along the circle
  EXPECT_EQ(o.algebra.algebra.product(1, 2), (SparseVec{{3, Scalar(1)}}));
  EXPECT_EQ(o.algebra.algebra.product(2, 1), (SparseVec{{3, Scalar(-1)}}));
  // quasi-associativity through the stored associator
  expect_all_pass(verify_algebra(o.algebra.algebra));
}

TEST(Octonions, Suite) {
  const Report r = octonion_suite(1, 20);
  expect_all_pass(r);
  EXPECT_EQ(r.find("quasi-associativity")->cases, 512u);
}

TEST(Octonions, CsvDump) {
  const std::string csv = octonion_csv(fano_octonions());
  EXPECT_EQ(csv.substr(0, 11), "i,j,k,sign\n");
  EXPECT_NE(csv.find("\n1,1,0,-1\n"), std::string::npos);
  EXPECT_NE(csv.find("\n1,2,3,1\n"), std::string::npos);
}

TEST(Torus, CochainValues) {
  const TorusCochain f(Rational(1, 3), 5);
  EXPECT_EQ(f.value(1, 0, 0, 1), Cyclotomic::root_of_unity(1, 6));
  EXPECT_EQ(f.value(0, 1, 1, 0), Cyclotomic::root_of_unity(-1, 6));
  EXPECT_TRUE(f.value(2, 0, -3, 0).is_one());
  const TorusCochain half(Rational(1, 2), 2);
  EXPECT_EQ(half.value(1, 0, 0, 1), Cyclotomic::root_of_unity(1, 4));
}

TEST(Torus, Suites) {
  for (const Rational& theta : {Rational(1, 2), Rational(1, 3), Rational(2, 5)}) expect_all_pass(torus_suite(theta, 5));
}
