#include <random>

#include <gtest/gtest.h>

#include "hecketrace/laurent_poly.hpp"
#include "hecketrace/qpoly.hpp"
#include "hecketrace/qrational.hpp"
#include "hecketrace/quad_ext.hpp"

using namespace hecketrace;

namespace {

const LaurentPoly kV = LaurentPoly::v();
const LaurentPoly kDelta = LaurentPoly::delta();
const QPoly kQ = QPoly::q();

LaurentPoly random_laurent(std::mt19937_64& rng, int spread = 4, int terms = 4) {
  std::uniform_int_distribution<int> e(-spread, spread);
  std::uniform_int_distribution<int> c(-9, 9);
  LaurentPoly out;
  for (int k = 0; k < terms; ++k) out += LaurentPoly::monomial(c(rng), e(rng));
  return out;
}

QPoly random_qpoly(std::mt19937_64& rng, int degree = 3) {
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Integer> coeffs;
  for (int k = 0; k <= degree; ++k) coeffs.emplace_back(c(rng));
  return QPoly(coeffs);
}

}  // namespace

TEST(LaurentPoly, ZeroHasEmptySupport) {
  EXPECT_TRUE(LaurentPoly{}.is_zero());
  EXPECT_TRUE((kV - kV).is_zero());
  EXPECT_TRUE((kV - kV).terms().empty());
  EXPECT_TRUE(LaurentPoly(0).is_zero());
}

TEST(LaurentPoly, RingArithmetic) {
  EXPECT_EQ(kDelta * kDelta, LaurentPoly::monomial(1, 2) - LaurentPoly(2) + LaurentPoly::monomial(1, -2));
  EXPECT_EQ(kDelta.pow(3), kDelta * kDelta * kDelta);
  EXPECT_EQ(kV.shifted(3), LaurentPoly::monomial(1, 4));
  EXPECT_EQ(LaurentPoly(5).times_delta(), LaurentPoly(5) * kDelta);
}

TEST(LaurentPoly, BigCoefficientsStayExact) {
  const LaurentPoly big = LaurentPoly::monomial(Integer("123456789012345678901234567890"), 3);
  const LaurentPoly sq = big * big;
  EXPECT_EQ(sq.coeff(6), Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST(Bar, Examples) {
  EXPECT_EQ(bar(kDelta), kDelta);
  EXPECT_EQ(bar(LaurentPoly::monomial(1, 2)), LaurentPoly::monomial(1, -2));
  EXPECT_EQ(bar(LaurentPoly(1)), LaurentPoly(1));
  EXPECT_EQ(bar(kV), -LaurentPoly::monomial(1, -1));
}

TEST(Bar, InvolutiveAndMultiplicativeOnRandomSamples) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const LaurentPoly f = random_laurent(rng);
    const LaurentPoly g = random_laurent(rng);
    ASSERT_EQ(bar(bar(f)), f);
    ASSERT_EQ(bar(f * g), bar(f) * bar(g));
    ASSERT_EQ(bar(f + g), bar(f) + bar(g));
  }
}

TEST(ExpandInDelta, Examples) {
  EXPECT_EQ(expand_in_delta(kDelta), (std::vector<Integer>{0, 1}));
  EXPECT_FALSE(expand_in_delta(LaurentPoly::monomial(1, 2) - LaurentPoly(1)).has_value());
  EXPECT_EQ(expand_in_delta(kDelta * kDelta + LaurentPoly(3)), (std::vector<Integer>{3, 0, 1}));
  EXPECT_EQ(expand_in_delta(LaurentPoly{}), std::vector<Integer>{});
}

TEST(ExpandInDelta, RoundTripAndBarFixedOnRandomSamples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int i = 0; i < 2000; ++i) {
    std::vector<Integer> coeffs;
    for (int k = 0; k < 6; ++k) coeffs.emplace_back(c(rng));
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    const LaurentPoly f = from_delta_coeffs(coeffs);
    const auto back = expand_in_delta(f);
    ASSERT_TRUE(back.has_value());
    ASSERT_EQ(*back, coeffs);
    ASSERT_EQ(bar(f), f);
  }
  for (int i = 0; i < 2000; ++i) {
    const LaurentPoly f = random_laurent(rng);
    if (const auto e = expand_in_delta(f)) {
      ASSERT_EQ(bar(f), f);
      ASSERT_EQ(from_delta_coeffs(*e), f);
    }
  }
}

TEST(QPoly, FromLaurentExamples) {
  EXPECT_EQ(qpoly_from_laurent(kDelta, 1), kQ - QPoly(1));
  EXPECT_EQ(qpoly_from_laurent(LaurentPoly(1), 0), QPoly(1));
  const LaurentPoly f = LaurentPoly::monomial(1, 2) + LaurentPoly(2) + LaurentPoly::monomial(1, -2);
  EXPECT_EQ(qpoly_from_laurent(f, 2), kQ * kQ + QPoly(2) * kQ + QPoly(1));
  EXPECT_THROW(qpoly_from_laurent(kDelta, 0), DomainError);
  EXPECT_THROW(qpoly_from_laurent(LaurentPoly::monomial(1, -4), 2), DomainError);
}

TEST(QPoly, EmbeddingIsARingMap) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const QPoly a = random_qpoly(rng);
    const QPoly b = random_qpoly(rng);
    ASSERT_EQ((a * b).to_laurent(), a.to_laurent() * b.to_laurent());
    ASSERT_EQ(qpoly_from_laurent((a + b).to_laurent(), 0), a + b);
  }
}

TEST(QPoly, ExactDivision) {
  const QPoly qm1 = kQ - QPoly(1);
  EXPECT_EQ(*(qm1 * qm1 * (kQ + QPoly(2))).divide_exact(qm1), qm1 * (kQ + QPoly(2)));
  EXPECT_FALSE((kQ * kQ + QPoly(1)).divide_exact(qm1).has_value());
  EXPECT_EQ(QPoly::q_integer(3), kQ * kQ + kQ + QPoly(1));
  EXPECT_EQ(QPoly::q_minus_one_power(2), qm1 * qm1);
}

TEST(QRational, Examples) {
  const QPoly qm1 = kQ - QPoly(1);
  const QPoly qp1 = kQ + QPoly(1);
  EXPECT_EQ(QRational(kQ * kQ - QPoly(1), qm1).is_polynomial(), qp1);
  const QRational r(qm1 * qm1 * qp1 * QPoly::q_integer(3), qm1 * qp1);
  EXPECT_EQ(r.is_polynomial(), qm1 * QPoly::q_integer(3));
  EXPECT_FALSE(QRational(QPoly(1), qm1).is_polynomial().has_value());
  EXPECT_THROW(QRational(QPoly(1), QPoly{}), DomainError);
  EXPECT_THROW(QRational(1) / QRational(0), DomainError);
}

TEST(QRational, CanonicalFormIgnoresCommonFactors) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const QPoly a = random_qpoly(rng, 2);
    QPoly b = random_qpoly(rng, 2);
    QPoly k = random_qpoly(rng, 1);
    if (b.is_zero() || k.is_zero()) continue;
    ASSERT_EQ(QRational(a, b), QRational(a * k, b * k));
    ASSERT_EQ(QRational(a, b), QRational(-a, -b));
    const QRational r(a, b);
    ASSERT_TRUE(r.den().leading() > 0);
  }
}

TEST(QRational, FieldOperationsAndEvaluation) {
  const QRational a(kQ, kQ - QPoly(1));
  const QRational b(QPoly(1), kQ + QPoly(1));
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.evaluate_at(Rational(3)), Rational(3, 2));
  EXPECT_THROW(a.evaluate_at(Rational(1)), DomainError);
}

TEST(QuadExt, NormIsMultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-30, 30);
  for (int m : {1, 2, 3}) {
    for (int i = 0; i < 500; ++i) {
      const QuadExt<Rational> x(make_rational(c(rng), 7), Rational(c(rng)), Rational(m));
      const QuadExt<Rational> y(Rational(c(rng)), make_rational(c(rng), 5), Rational(m));
      ASSERT_EQ(x * x.conj(), QuadExt<Rational>::scalar(x.norm(), Rational(m)));
      ASSERT_EQ((x * y).norm(), x.norm() * y.norm());
      ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
    }
  }
}

TEST(Rational, MakeRationalIsCanonical) {
  EXPECT_EQ(make_rational(8, 4), Rational(2));
  EXPECT_EQ(make_rational(-6, -9), Rational(2, 3));
  EXPECT_EQ(make_rational(3, -6).get_den(), 2);
}

TEST(QuadExt, OverLaurentCoefficients) {
  const LaurentPoly m(2);
  const QuadExt<LaurentPoly> c(LaurentPoly{}, LaurentPoly(1), m);
  EXPECT_EQ(c * c, QuadExt<LaurentPoly>::scalar(m, m));
  const QuadExt<LaurentPoly> x(kV, kDelta, m);
  EXPECT_EQ(x * x.conj(), QuadExt<LaurentPoly>::scalar(x.norm(), m));
  EXPECT_THROW(c + QuadExt<LaurentPoly>::scalar(1, LaurentPoly(3)), InvalidArgument);
}
