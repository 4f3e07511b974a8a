#include <gtest/gtest.h>

#include <random>

#include "hopfq/constructors.hpp"
#include "hopfq/error.hpp"
#include "hopfq/hopf_verify.hpp"
#include "hopfq/host.hpp"
#include "hopfq/leg_tensor.hpp"

using namespace hopfq;

namespace {

using T = LegTensor<FiniteHost>;

void expect_all_pass(const Report& r) {
  for (const auto& c : r.checks) {
    EXPECT_EQ(c.status, Status::Pass) << r.name << ": " << c.id << " residual " << c.residual_terms << " at "
                                      << c.witness;
  }
}

T random_tensor(const FiniteHost& h, int arity, std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<std::uint32_t> key(0, static_cast<std::uint32_t>(h.dim() - 1));
  std::uniform_int_distribution<int> coeff(-3, 3);
  T::Entries e;
  for (int t = 0; t < terms; ++t) {
    MultiKey k{};
    for (int l = 0; l < arity; ++l) k[l] = key(rng);
    e.emplace_back(k, Scalar(coeff(rng)));
  }
  return T::from_entries(h, arity, e);
}

}  // namespace

TEST(LegTensor, LegEmbedPlacesFactors) {
  FiniteHost h(group_algebra(symmetric_group_s3()));
  const T ab = T::basis(h, {1, 4});
  const T emb = ab.leg_embed({1, 3}, 3);
  EXPECT_EQ(emb, T::basis(h, {1, 0, 4}));  // a⊗1⊗b
  const T x = T::basis(h, {2});
  EXPECT_EQ(x.leg_embed({1}, 1), x);
  EXPECT_THROW(
      {
        try {
          (void)ab.leg_embed({2, 1}, 3);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::BadPositions);
          throw;
        }
      },
      Error);
}

TEST(LegTensor, CoproductOnLeg) {
  FiniteHost h(dual_group_hopf(symmetric_group_s3()));
  const T ab = T::basis(h, {1, 4});
  // Δ(a)⊗b built independently
  const T expect = T::from_element(h, SparseVec{{1, Scalar(1)}}).coproduct_leg(1).tensor(T::basis(h, {4}));
  EXPECT_EQ(ab.coproduct_leg(1), expect);
  EXPECT_EQ(T::one(h, 2).coproduct_leg(2), T::one(h, 3));
  EXPECT_THROW((void)ab.coproduct_leg(3), Error);
}

TEST(LegTensor, CoproductLegsCoassociative) {
  for (const auto& pres : {group_algebra(symmetric_group_s3()), dual_group_hopf(symmetric_group_s3())}) {
    FiniteHost h(pres);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 5; ++t) {
      const T x = random_tensor(h, 2, rng);
      EXPECT_EQ(x.coproduct_leg(2).coproduct_leg(3), x.coproduct_leg(2).coproduct_leg(2));
      EXPECT_EQ(x.coproduct_leg(1).coproduct_leg(2), x.coproduct_leg(1).coproduct_leg(1));
      // embedding then splitting equals splitting then embedding
      EXPECT_EQ(x.leg_embed({1, 3}, 3).coproduct_leg(3), x.coproduct_leg(2).leg_embed({1, 3, 4}, 4));
    }
  }
}

TEST(LegTensor, ProductsAndInverses) {
  FiniteHost k4(group_algebra(klein_four()));
  const FiniteGroup v = klein_four();
  const T x = T::basis(k4, {0, 1});
  const T y = T::basis(k4, {0, v.inverse(1)});
  EXPECT_EQ(x * y, T::one(k4, 2));
  FiniteHost s3(group_algebra(symmetric_group_s3()));
  const FiniteGroup g = symmetric_group_s3();
  EXPECT_EQ(T::basis(s3, {1, 1}) * T::basis(s3, {4, 4}), T::basis(s3, {g.mul(1, 4), g.mul(1, 4)}));
  EXPECT_EQ(T::basis(s3, {4, 2}).invert(), T::basis(s3, {g.inverse(4), g.inverse(2)}));
  EXPECT_EQ(T::one(s3, 2).invert(), T::one(s3, 2));
  EXPECT_THROW((void)T(s3, 2).invert(), Error);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 5; ++t) {
    const T a = random_tensor(s3, 2, rng);
    const T b = random_tensor(s3, 2, rng);
    const T c = random_tensor(s3, 2, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
  EXPECT_THROW((void)(T::one(s3, 2) * T::one(s3, 3)), Error);
}

TEST(LegTensor, RegularRepresentationInverse) {
  FiniteHost s3(group_algebra(symmetric_group_s3()));
  // 2 + (12) is invertible in kS3; 1 + (12) is a zero divisor.
  const T good = T::from_element(s3, SparseVec{{0, Scalar(2)}, {1, Scalar(1)}});
  const T inv = good.invert();
  EXPECT_EQ(good * inv, T::one(s3, 1));
  EXPECT_EQ(inv * good, T::one(s3, 1));
  const T bad = T::from_element(s3, SparseVec{{0, Scalar(1)}, {1, Scalar(1)}});
  EXPECT_FALSE(bad.try_invert().has_value());
}

TEST(LegTensor, TruncatedExponentialInverse) {
  FiniteHost s3(group_algebra(symmetric_group_s3()));
  const int k = 4;
  // exp(ħ a) and exp(-ħ a) for a = (123)
  T e = T::one(s3, 1);
  T em = T::one(s3, 1);
  T pw = T::one(s3, 1);
  T pwm = T::one(s3, 1);
  const T a = T::from_element(s3, SparseVec{{4, Scalar::hbar(k)}});
  for (int n = 1; n <= k; ++n) {
    pw = (pw * a).scaled(Scalar(Rational(1, n)));
    pwm = (pwm * -a).scaled(Scalar(Rational(1, n)));
    e = e + pw;
    em = em + pwm;
  }
  EXPECT_EQ(e.invert(), em);
}

TEST(Convolution, UnitAndAntipode) {
  const HopfPresentation h = group_algebra(symmetric_group_s3());
  const LinearMap ue = unit_counit(h.coalgebra, h.algebra);
  const LinearMap id = identity_map(h.dim());
  EXPECT_EQ(convolution(h.coalgebra, h.algebra, ue, id), id);
  EXPECT_EQ(convolution(h.coalgebra, h.algebra, id, *h.antipode), ue);
  EXPECT_EQ(convolution(h.coalgebra, h.algebra, *h.antipode, id), ue);
  // id ⋆ id on kZ2 sends g to g² = 1
  const HopfPresentation z2 = group_algebra(cyclic_group(2));
  const LinearMap sq = convolution(z2.coalgebra, z2.algebra, identity_map(2), identity_map(2));
  EXPECT_EQ(sq, (Matrix{{Scalar(1), Scalar(1)}, {Scalar(0), Scalar(0)}}));
}

TEST(VerifyHopf, CorruptedCoproductFails) {
  HopfPresentation h = group_algebra(symmetric_group_s3());
  // Δ(g) = g⊗g + g⊗1
  h.coalgebra.coproduct[1] = SparseVec{{flat2(1, 0, 6), Scalar(1)}, {flat2(1, 1, 6), Scalar(1)}};
  const Report r = verify_hopf(h);
  const Check* c = r.find("coassociativity");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Fail);
  EXPECT_EQ(c->witness, "(12)");
}

TEST(Constructors, GroupAlgebrasAndDuals) {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), z2_cubed(), symmetric_group_s3(),
                               dihedral_group_d4(), pauli_group()}) {
    const HopfPresentation kg = group_algebra(g);
    const HopfPresentation dual = dual_group_hopf(g);
    expect_all_pass(verify_hopf(kg));
    expect_all_pass(verify_hopf(dual));
    EXPECT_EQ(kg.commutative, g.abelian());
    EXPECT_TRUE(kg.cocommutative);
    EXPECT_TRUE(dual.commutative);
    EXPECT_EQ(dual.cocommutative, g.abelian());
    EXPECT_NE(verify_hopf(kg).find("antipode-involutive"), nullptr);
    expect_all_pass(dual_pairing_check(g));
  }
}

TEST(Constructors, PauliGroupHasCentralMinusOne) {
  const FiniteGroup p = pauli_group();
  EXPECT_EQ(p.order(), 8u);
  const auto a = p.find("s1");
  const auto b = p.find("s2");
  const auto c = p.find("-1");
  EXPECT_EQ(p.mul(a, b), p.mul(c, p.mul(b, a)));
  const auto center = p.center();
  EXPECT_NE(std::find(center.begin(), center.end(), c), center.end());
  EXPECT_FALSE(p.abelian());
}

TEST(Constructors, InvalidGroupTable) {
  EXPECT_THROW(FiniteGroup("bad", {"a", "b"}, {{0, 1}, {0, 1}}), Error);
  // Latin square without an identity-compatible associativity
  EXPECT_THROW(FiniteGroup("bad", {"a", "b", "c"}, {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}), Error);
}

TEST(Constructors, DualOfZ2IsomorphicToGroupAlgebra) {
  // δ_± ↦ (1 ± g)/2 intertwines products, coproducts and counits
  const HopfPresentation kg = group_algebra(cyclic_group(2));
  const HopfPresentation dual = dual_group_hopf(cyclic_group(2));
  const Scalar half(Rational(1, 2));
  const Matrix phi = {{half, half}, {half, -half}};
  auto map1 = [&](const SparseVec& x) { return apply_map(phi, x); };
  for (std::uint32_t i = 0; i < 2; ++i) {
    for (std::uint32_t j = 0; j < 2; ++j) {
      const SparseVec ei{{i, Scalar(1)}};
      const SparseVec ej{{j, Scalar(1)}};
      EXPECT_EQ(map1(dual.algebra.multiply(ei, ej)), kg.algebra.multiply(map1(ei), map1(ej)));
    }
    const SparseVec ei{{i, Scalar(1)}};
    SparseVec lhs;
    for (const auto& [ab, c] : dual.coalgebra.delta(i)) {
      lhs = axpy(lhs, c, tensor(map1({{ab / 2, Scalar(1)}}), map1({{ab % 2, Scalar(1)}}), 2));
    }
    EXPECT_EQ(lhs, kg.coalgebra.apply_delta(map1(ei)));
    EXPECT_EQ(dual.coalgebra.counit[i], kg.coalgebra.apply_counit(map1(ei)));
  }
}

TEST(Constructors, Taft) {
  for (int p : {2, 3, 5}) {
    const HopfPresentation t = taft(p, Cyclotomic::root_of_unity(1, p));
    EXPECT_EQ(t.dim(), static_cast<std::size_t>(p * p));
    expect_all_pass(verify_hopf(t));
    EXPECT_EQ(verify_hopf(t).find("antipode-involutive"), nullptr);
    // S has order 2p on x
    const SparseVec x{{1, Scalar(1)}};
    SparseVec y = x;
    int order = 0;
    do {
      y = t.apply_antipode(y);
      ++order;
    } while (y != x && order < 4 * p);
    EXPECT_EQ(order, 2 * p);
  }
  const HopfPresentation t3 = taft(3, Cyclotomic::root_of_unity(1, 3));
  const SparseVec x{{1, Scalar(1)}};
  const SparseVec g_inv{{6, Scalar(1)}};
  EXPECT_EQ(t3.apply_antipode(x), scale(t3.algebra.multiply(x, g_inv), Scalar(-1)));
  EXPECT_EQ(t3.apply_antipode(t3.apply_antipode(x)), scale(x, Scalar(Cyclotomic::root_of_unity(1, 3))));
  try {
    (void)taft(3, Cyclotomic(1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrimitiveRoot);
  }
}

TEST(Constructors, Shuffle) {
  const ShuffleBialgebra sh(2, 4);
  const std::uint32_t v1 = sh.index({1});
  const std::uint32_t v2 = sh.index({2});
  const std::uint32_t v12 = sh.index({1, 2});
  const std::uint32_t v21 = sh.index({2, 1});
  const std::uint32_t one = sh.index({});
  EXPECT_EQ(sh.shuffle_product({1}, {2}), (SparseVec{{v12, Scalar(1)}, {v21, Scalar(1)}}));
  const auto d = static_cast<std::uint32_t>(sh.words().size());
  SparseVec expect{{flat2(one, v12, d), Scalar(1)}, {flat2(v1, v2, d), Scalar(1)}, {flat2(v12, one, d), Scalar(1)}};
  EXPECT_EQ(sh.deconcatenate({1, 2}), expect);
  EXPECT_EQ(sh.shuffle_product({}, {1, 2}), (SparseVec{{v12, Scalar(1)}}));
  EXPECT_THROW((void)sh.shuffle_product({1, 2, 1}, {1, 2}), Error);
  expect_all_pass(verify_hopf(sh.hopf()));
}

TEST(Constructors, PareigisWindow) {
  const int n = 4;
  const HopfPresentation p = pareigis_window(n);
  const auto& a = p.algebra;
  const std::uint32_t x = pareigis_gx(n, 0);
  const std::uint32_t g = pareigis_g(n, 1);
  const std::uint32_t gi = pareigis_g(n, -1);
  EXPECT_TRUE(a.product(x, x).empty());
  EXPECT_EQ(a.product(g, gi), (SparseVec{{pareigis_g(n, 0), Scalar(1)}}));
  EXPECT_EQ(a.product(x, g), scale(a.product(g, x), Scalar(-1)));
  EXPECT_EQ(p.apply_antipode({{x, Scalar(1)}}), scale(a.product(x, gi), Scalar(-1)));
  EXPECT_THROW((void)a.product(pareigis_g(n, 4), g), Error);
  expect_all_pass(verify_hopf(p));
}

TEST(Constructors, PareigisComodules) {
  const int window = 4;
  const HopfPresentation h = pareigis_window(window);
  ChainComplexWindow zero;
  zero.radius = 1;
  zero.dims = {1, 2, 1};
  zero.d = {Matrix{}, Matrix(1, std::vector<Scalar>(2)), Matrix(2, std::vector<Scalar>(1))};
  expect_all_pass(verify_comodule(chain_to_comodule(zero, window), h));

  // k -> k with d = 1, in degrees 1 -> 0
  ChainComplexWindow two;
  two.radius = 1;
  two.dims = {0, 1, 1};
  two.d = {Matrix{}, Matrix{}, Matrix{{Scalar(1)}}};
  const Comodule m = chain_to_comodule(two, window);
  expect_all_pass(verify_comodule(m, h));
  const ChainComplexWindow back = comodule_to_chain(m, 1, window);
  EXPECT_EQ(back.dims, two.dims);
  EXPECT_EQ(back.d[2], two.d[2]);

  // d² ≠ 0 : k -> k -> k with both maps 1
  ChainComplexWindow bad;
  bad.radius = 1;
  bad.dims = {1, 1, 1};
  bad.d = {Matrix{}, Matrix{{Scalar(1)}}, Matrix{{Scalar(1)}}};
  try {
    (void)chain_to_comodule(bad, window);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAComplex);
  }
  const Report r = verify_comodule(chain_to_comodule(bad, window, false), h);
  EXPECT_EQ(r.find("coaction-coassociative")->status, Status::Fail);
  EXPECT_EQ(r.find("coaction-coassociative")->witness, "a1_0");
}
