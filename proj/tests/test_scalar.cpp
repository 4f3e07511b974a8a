#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "hopfq/error.hpp"
#include "hopfq/scalar_parse.hpp"
#include "hopfq/series.hpp"

using namespace hopfq;

namespace {

Cyclotomic random_cyclotomic(std::mt19937_64& rng, int conductor) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Cyclotomic::Coords coords;
  for (int i = 0; i < euler_phi(conductor); ++i) coords.push_back(Rational(coeff(rng), den(rng)));
  return Cyclotomic::from_coords(conductor, coords);
}

Series random_series(std::mt19937_64& rng, int k) {
  std::vector<TauLaurent> coeffs;
  std::uniform_int_distribution<int> expo(-1, 1);
  const int conductors[] = {1, 3, 4, 5, 12};
  std::uniform_int_distribution<int> pick(0, 4);
  for (int d = 0; d <= k; ++d) {
    coeffs.push_back(TauLaurent::monomial(expo(rng), random_cyclotomic(rng, conductors[pick(rng)])) +
                     TauLaurent::monomial(expo(rng), random_cyclotomic(rng, conductors[pick(rng)])));
  }
  return Series::from_coeffs(k, coeffs);
}

}  // namespace

TEST(Rational, PromotesAndDemotes) {
  Rational big(std::int64_t{1} << 61);
  Rational sq = big * big * big;
  EXPECT_FALSE(sq.is_small());
  Rational back = sq / big / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  EXPECT_EQ(Rational(6, -4), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(binomial(5, 2), Rational(10));
}

TEST(Cyclotomic, PolynomialTable) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), (std::vector<long long>{1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long long>{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(12), 4);
}

TEST(Cyclotomic, RootsOfUnity) {
  EXPECT_EQ(Cyclotomic::root_of_unity(1, 2), Cyclotomic(-1));
  EXPECT_EQ(Cyclotomic::root_of_unity(0, 5), Cyclotomic(1));
  const Cyclotomic z3 = Cyclotomic::root_of_unity(1, 3);
  EXPECT_TRUE((z3 * z3 + z3 + Cyclotomic(1)).is_zero());
  for (int q = 1; q <= 30; ++q) {
    for (int p = -q; p <= q; ++p) {
      const Cyclotomic z = Cyclotomic::root_of_unity(p, q);
      EXPECT_TRUE(z.pow(q).is_one()) << p << "/" << q;
      const std::complex<double> expect = std::polar(1.0, 2.0 * std::numbers::pi * p / q);
      EXPECT_NEAR(std::abs(z.to_complex() - expect), 0.0, 1e-9) << p << "/" << q;
    }
  }
}

TEST(Cyclotomic, CrossConductorAndInverse) {
  const Cyclotomic i = Cyclotomic::root_of_unity(1, 4);
  const Cyclotomic w = Cyclotomic::root_of_unity(1, 6);
  // exp(2 pi i/4) exp(2 pi i/6) = exp(2 pi i 5/12)
  EXPECT_EQ(i * w, Cyclotomic::root_of_unity(5, 12));
  EXPECT_EQ(Cyclotomic::root_of_unity(2, 12), w);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const int conductors[] = {3, 5, 7, 8, 9, 12, 15};
    const Cyclotomic x = random_cyclotomic(rng, conductors[t % 7]);
    if (x.is_zero()) continue;
    EXPECT_TRUE((x * x.inverse()).is_one());
    const Cyclotomic y = random_cyclotomic(rng, conductors[(t + 3) % 7]);
    const int l = std::lcm(x.conductor(), y.conductor());
    EXPECT_EQ(x.embed(2 * l) + y.embed(2 * l), x + y);
  }
}

TEST(Cyclotomic, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  const int conductors[] = {1, 3, 4, 5, 8, 12};
  for (int t = 0; t < 60; ++t) {
    const Cyclotomic a = random_cyclotomic(rng, conductors[t % 6]);
    const Cyclotomic b = random_cyclotomic(rng, conductors[(t + 1) % 6]);
    const Cyclotomic c = random_cyclotomic(rng, conductors[(t + 4) % 6]);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    const std::complex<double> num = a.to_complex() * b.to_complex();
    EXPECT_NEAR(std::abs((a * b).to_complex() - num), 0.0, 1e-9);
  }
}

TEST(Series, InvertGeometric) {
  const int k = 6;
  const Series h = Series::hbar(k);
  const Series inv = series_invert(Series(1) + h);
  for (int d = 0; d <= k; ++d) EXPECT_EQ(inv.coeff(d), TauLaurent(d % 2 == 0 ? 1 : -1));
  EXPECT_TRUE((inv * (Series(1) + h)).is_one());
  EXPECT_TRUE(series_invert(Series(1)).is_one());
  try {
    series_invert(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonUnit);
  }
  EXPECT_THROW(series_invert(Series(1) + Series::tau()), Error);
}

TEST(Series, Exponential) {
  const int k = 3;
  const Series x = Series::hbar(k) * Series::tau();
  const Series e = series_exp(x);
  EXPECT_EQ(e.coeff(0), TauLaurent(1));
  EXPECT_EQ(e.coeff(1), TauLaurent::monomial(1, Cyclotomic(1)));
  EXPECT_EQ(e.coeff(2), TauLaurent::monomial(2, Cyclotomic(Rational(1, 2))));
  EXPECT_EQ(e.coeff(3), TauLaurent::monomial(3, Cyclotomic(Rational(1, 6))));
  const Series h = Series::hbar(5);
  EXPECT_TRUE((series_exp(h) * series_exp(-h)).is_one());
  EXPECT_TRUE(series_exp(Series(0).at_order(4)).is_one());
  try {
    series_exp(Series(1).at_order(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonNilpotent);
  }
}

TEST(Series, ExpIsAdditiveAndInverseTwoSided) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 15; ++t) {
    Series a = random_series(rng, 4);
    Series b = random_series(rng, 4);
    a -= Series(a.coeff(0)).at_order(4);
    b -= Series(b.coeff(0)).at_order(4);
    EXPECT_EQ(series_exp(a + b), series_exp(a) * series_exp(b));
    Series u = random_series(rng, 4);
    if (!u.is_unit()) continue;
    EXPECT_TRUE((u * series_invert(u)).is_one());
    EXPECT_TRUE((series_invert(u) * u).is_one());
  }
}

TEST(Series, RingAxioms) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const Series a = random_series(rng, 3);
    const Series b = random_series(rng, 3);
    const Series c = random_series(rng, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) * c, a * c + b * c);
  }
}

TEST(Series, OrderMismatch) {
  try {
    (void)(Series::hbar(2) + Series::hbar(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OrderMismatch);
  }
  EXPECT_EQ((Series::hbar(2) + Series(1)).order(), 2);
}

TEST(Series, NumericEval) {
  EXPECT_NEAR(std::abs(numeric_eval(Series(1), Rational(3)) - 1.0), 0.0, 1e-12);
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  EXPECT_NEAR(std::abs(numeric_eval(Series::tau(), Rational(0)) - two_pi_i), 0.0, 1e-12);
  const Series s = Series::hbar(2) * Series::tau();
  EXPECT_NEAR(std::abs(numeric_eval(s, Rational(1, 2)) - std::complex<double>(0, std::numbers::pi)), 0.0, 1e-12);
  EXPECT_EQ(numeric_eval_string(s, Rational(1, 2), 6), "0 + 3.14159i");
}

TEST(ScalarGrammar, ParsesBasics) {
  EXPECT_EQ(parse_scalar("z(3,1)+z(3,2)"), Scalar(-1));
  EXPECT_EQ(parse_scalar("3/6"), Scalar(Rational(1, 2)));
  EXPECT_EQ(parse_scalar("z(4,1)^2"), Scalar(-1));
  EXPECT_EQ(parse_scalar("(1+h)^-1", 3), series_invert(Series(1) + Series::hbar(3)));
  EXPECT_EQ(parse_scalar("tau^-1 * tau"), Scalar(1));
  EXPECT_EQ(parse_scalar("2 - -3"), Scalar(5));
  EXPECT_EQ(parse_scalar("h^4", 3), Scalar(0));
}

TEST(ScalarGrammar, ReportsPosition) {
  try {
    parse_scalar("1 +\n  2 * foo");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);
  }
  try {
    parse_scalar("h");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 1);
  }
  EXPECT_THROW(parse_scalar("(1+2"), ParseError);
  EXPECT_THROW(parse_scalar("1/0"), ParseError);
  EXPECT_THROW(parse_scalar(""), ParseError);
  EXPECT_THROW(parse_scalar("z(0,1)"), ParseError);
}

TEST(ScalarGrammar, RoundTrip) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const Series s = random_series(rng, 3);
    EXPECT_EQ(parse_scalar(s.str(), 3), s) << s.str();
  }
  EXPECT_EQ(Series(0).str(), "0");
  EXPECT_EQ(parse_scalar("z(3,2)").str(), "-1 - z(3,1)");
}
