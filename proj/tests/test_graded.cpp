#include <gtest/gtest.h>

#include "hopfq/constructors.hpp"
#include "hopfq/error.hpp"
#include "hopfq/graded.hpp"
#include "hopfq/hopf_verify.hpp"

using namespace hopfq;

namespace {

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::Pass) << r.name << ": " << c.id << " residual " << c.residual_terms << " at "
                                      << c.witness;
  }
}

const GradedAlgebra& find(const std::vector<NamedGraded>& b, const std::string& name) {
  for (const auto& x : b) {
    if (x.algebra.algebra.name == name) return x.algebra;
  }
  throw std::runtime_error("missing " + name);
}

}  // namespace

TEST(Graded, GroupAlgebraIsStrong) {
  const auto b = graded_battery(2);
  const GradedAlgebra& kz2 = b[0].algebra;
  const auto v = strong_grading(kz2);
  EXPECT_TRUE(v.strong);
  ASSERT_EQ(v.resolutions.size(), 2u);
  // 1 = g·g
  const auto& r = v.resolutions[1];
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(kz2.algebra.multiply(r.pairs[0].first, r.pairs[0].second), kz2.algebra.unit);
}

TEST(Graded, DualNumbersNotStrong) {
  const auto b = graded_battery(2);
  const GradedAlgebra& a = find(b, "k[x]/(x^2)");
  const auto v = strong_grading(a);
  EXPECT_FALSE(v.strong);
  EXPECT_EQ(v.failing_degree, 1);
  EXPECT_FALSE(resolution_of_unity(a, 1).has_value());
  const CanonicalMap m = canonical_map(a);
  EXPECT_TRUE(m.well_defined);
  EXPECT_FALSE(m.bijective);
  EXPECT_TRUE(m.agrees_with_strong_grading);
  const Report s = smeb_check(a, 1);
  EXPECT_FALSE(s.passed());
  EXPECT_EQ(s.find("multiplication-surjective")->status, Status::Fail);
}

TEST(Graded, NotHomogeneous) {
  auto b = graded_battery(2);
  GradedAlgebra a = find(b, "k[x]/(x^2)");
  a.degree = {1, 0};
  try {
    (void)strong_grading(a);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHomogeneous);
  }
}

TEST(Graded, CrossedProducts) {
  const auto b = graded_battery(2);
  const GradedAlgebra& m2 = b[3].algebra;
  EXPECT_EQ(m2.algebra.dim(), 8u);
  expect_all_pass(verify_algebra(m2.algebra));
  EXPECT_TRUE(strong_grading(m2).strong);
  const CanonicalMap m = canonical_map(m2);
  EXPECT_TRUE(m.bijective);
  EXPECT_EQ(m.dim_balanced, 16u);
  for (int g : m2.degrees()) expect_all_pass(smeb_check(m2, g));

  const GradedAlgebra& pair = b[4].algebra;
  EXPECT_EQ(pair.algebra.dim(), 4u);
  EXPECT_TRUE(canonical_map(pair).bijective);
}

TEST(Graded, CrossedProductErrors) {
  AlgebraPresentation k;
  k.name = "k";
  k.basis = {"1"};
  k.mult = {SparseVec{{0, Scalar(1)}}};
  k.unit = {{0, Scalar(1)}};
  const FiniteGroup z2 = cyclic_group(2);
  try {
    (void)crossed_product(k, z2, {identity_map(1), {{Scalar(2)}}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAutomorphism);
  }
  try {
    (void)crossed_product(k, z2, {identity_map(1)});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAction);
  }
  const GradedAlgebra trivial = crossed_product(k, z2, {identity_map(1), identity_map(1)});
  EXPECT_TRUE(strong_grading(trivial).strong);
}

TEST(Graded, ZWindows) {
  const auto b = graded_battery(3);
  const GradedAlgebra& laurent = find(b, "k[t,t^-1]");
  EXPECT_TRUE(strong_grading(laurent).strong);
  expect_all_pass(window_products(laurent));
  expect_all_pass(verify_algebra(laurent.algebra));
  const GradedAlgebra& cross = find(b, "k[t,s]/(ts,st)");
  EXPECT_FALSE(strong_grading(cross).strong);
  EXPECT_FALSE(window_products(cross).passed());
  EXPECT_FALSE(smeb_check(cross, 1).passed());
  EXPECT_EQ(smeb_check(laurent, 5).checks.front().status, Status::Error);
  try {
    (void)canonical_map(laurent);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  }
}

TEST(Graded, IdealProperty) {
  for (const auto& [a, strong] : graded_battery(2)) {
    for (int g : a.degrees()) EXPECT_EQ(ideal_residual(a, g), 0u) << a.algebra.name << " " << g;
  }
}

TEST(Sharp, Examples) {
  EXPECT_EQ(sharp({1, 2, 3}), (WeightVector{6, 3, 2}));
  EXPECT_EQ(sharp({4, 7}), (WeightVector{7, 4}));
  EXPECT_EQ(sharp({5}), (WeightVector{1}));
  EXPECT_FALSE(is_pairwise_coprime({2, 4}));
  EXPECT_FALSE(is_coprime(sharp({2, 4})));
  EXPECT_TRUE(is_coprime({2, 3, 4}));
  EXPECT_FALSE(is_pairwise_coprime({2, 3, 4}));
  expect_all_pass(sharp_laws({2, 3, 4, 1}));
  try {
    (void)sharp({});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  }
}

TEST(Suite, GradedGalois) { expect_all_pass(graded_galois_suite()); }

TEST(Suite, SharpMap) {
  const Report r = sharp_map_suite();
  expect_all_pass(r);
  EXPECT_EQ(r.find("sharp-sharp=k*l-exhaustive")->cases, 4u + 16u + 64u + 256u);
}
