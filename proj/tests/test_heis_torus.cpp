#include <gtest/gtest.h>

#include "hopfq/error.hpp"
#include "hopfq/heis_torus.hpp"

using namespace hopfq;

namespace {

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::Pass) << r.name << ": " << c.id << " residual " << c.residual_terms << " at "
                                      << c.witness;
  }
}

template <class F>
void expect_error(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(Heis, VectorFields) {
  const int k = 3;
  const HeisElement f = HeisElement::monomial(k, 1, 2, 1, Rational(1, 2));
  // X(e(x+2t) y e(y/2)) = τ·f + 2τ·y·f
  HeisElement expect = f.scaled(Scalar::tau());
  expect.add(HeisKey{1, 2, 2, Rational(1, 2)}, Scalar::tau() * Scalar(2));
  EXPECT_EQ(vf_apply(VectorField::X, f), expect);
  HeisElement dy = HeisElement::monomial(k, 1, 2, 0, Rational(1, 2));
  dy.add(HeisKey{1, 2, 1, Rational(1, 2)}, Scalar::tau() * Scalar(Rational(1, 2)));
  EXPECT_EQ(vf_apply(VectorField::Y, f), dy);
  EXPECT_EQ(vf_apply(VectorField::T, f), f.scaled(Scalar::tau() * Scalar(2)));
}

TEST(Heis, TorusRelation) {
  const int k = 4;
  const Scalar th = Series::hbar(k);
  const HeisElement u = HeisElement::u(k);
  const HeisElement v = HeisElement::v(k);
  EXPECT_EQ(star(v, u, th), u.pointwise(v));
  EXPECT_EQ(star(u, v, th), u.pointwise(v).scaled(series_exp(Scalar::tau() * th)));
  EXPECT_NE(star(u, v, th), star(v, u, th));
  expect_error(ErrorKind::NotFormallyNilpotent, [&] { (void)star(u, v, Scalar(1)); });
  expect_error(ErrorKind::OrderMismatch, [&] { (void)star(u, HeisElement::v(3), th); });
}

TEST(Heis, Alpha) {
  const Scalar h = Series::hbar(5);
  EXPECT_EQ(alpha(h, 1), h - h.pow(2) + h.pow(3) - h.pow(4) + h.pow(5));
  EXPECT_EQ(alpha(alpha(h, 2), -2), h);
  EXPECT_EQ(alpha(alpha(h, 3), 4), alpha(h, 7));
}

TEST(Heis, GeneralizedAssociativity) {
  const int k = 4;
  const Scalar th = Series::hbar(k) + Series::hbar(k).pow(2);
  const HeisElement a = random_heis(1, 0, k);
  const HeisElement c = random_heis(2, 1, k);
  for (int n : {-2, 1, 3}) {
    const HeisElement b = random_heis(3, n, k);
    EXPECT_TRUE(assoc_residual(a, b, c, th, alpha(th, n)).is_zero()) << n;
    EXPECT_FALSE(assoc_residual(a, b, c, th, alpha(th, n - 1)).is_zero()) << n;
    EXPECT_FALSE(assoc_residual(a, b, c, th, alpha(th, n) + Series::hbar(k).pow(k)).is_zero()) << n;
  }
  expect_error(ErrorKind::NotHomogeneous, [&] { (void)assoc_residual(a, a + c, c, th, th); });
}

TEST(Heis, M3) {
  EXPECT_TRUE(m3_membership(HeisElement::monomial(2, 3, 0, 0, Rational(2))));
  EXPECT_FALSE(m3_membership(HeisElement::monomial(2, 0, 1, 0, Rational(0))));
  EXPECT_FALSE(m3_membership(HeisElement::monomial(2, 0, 0, 1, Rational(0))));
  // e(x)(1 + e(y)) is invariant
  EXPECT_TRUE(m3_membership(HeisElement::u(2) + HeisElement::u(2).pointwise(HeisElement::v(2))));
}

TEST(Zak, Transform) {
  const int k = 3;
  expect_error(ErrorKind::ZeroDegree, [&] { (void)zak_transform(HeisElement::u(k)); });
  expect_error(ErrorKind::NotHomogeneous,
               [&] { (void)zak_transform(random_heis(1, 1, k) + random_heis(2, 2, k)); });
  // e(x + 2t) e(y/2): f̃(y;1) = e((y - 1/2)/2) = e(-1/4) e(y/2)
  const ZakElement z = zak_transform(HeisElement::monomial(k, 1, 2, 0, Rational(1, 2)));
  ASSERT_EQ(z.parts().size(), 1u);
  EXPECT_EQ(z.parts().at(1).begin()->second, Scalar(Cyclotomic::root_of_unity(-1, 4)));
}

TEST(Zak, Commutation) {
  const int k = 4;
  const Scalar th = Series::hbar(k);
  for (int n : {1, 2, -3}) {
    const ZakElement f = zak_transform(random_heis(7, n, k));
    const Scalar left = series_exp(Scalar::tau() * alpha(th, n));
    const Scalar right = series_exp(Scalar::tau() * th);
    EXPECT_EQ(zak_act_left("UV", f, th), zak_act_left("VU", f, th).scaled(left));
    EXPECT_EQ(zak_act_right(f, "UV", th), zak_act_right(f, "VU", th).scaled(right));
    // the left relation uses α_n(θ), not θ
    EXPECT_NE(zak_act_left("UV", f, th), zak_act_left("VU", f, th).scaled(right));
    EXPECT_EQ(zak_act_left("Uu", f, th), f);
    EXPECT_EQ(zak_act_right(f, "vV", th), f);
  }
  expect_error(ErrorKind::SchemaError, [&] { (void)zak_act_left("W", zak_transform(random_heis(1, 1, k)), th); });
}

TEST(Zak, Pairing) {
  const int k = 3;
  const Scalar th = Series::hbar(k) * Scalar(Rational(1, 2));
  const HeisElement f1 = random_heis(11, 1, k);
  const HeisElement f2 = random_heis(12, 1, k);
  const ZakElement z1 = zak_transform(f1);
  const ZakElement z2 = zak_transform(f2);
  EXPECT_EQ(zak_pair(z1, z2, th), zak_transform(star(f1, f2, th)));
  EXPECT_NE(zak_pair(z1, z2, th), zak_pair(z1, z2, Scalar(0).at_order(k)));
  // balanced over A₀^θ
  EXPECT_EQ(zak_pair(zak_act_right(z1, "UV", th), z2, th), zak_pair(z1, zak_act_left("UV", z2, alpha(th, -1)), th));
  expect_error(ErrorKind::DegenerateDegrees,
               [&] { (void)zak_pair(z1, zak_transform(random_heis(13, -1, k)), th); });
}

TEST(Suite, HeisTorus) { expect_all_pass(heis_torus_suite(1, 4)); }
