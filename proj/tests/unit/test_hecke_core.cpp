#include <random>

#include <gtest/gtest.h>

#include "hecketrace/hecke_expr.hpp"
#include "hecketrace/struct_const.hpp"
#include "regular_rep.hpp"

using namespace hecketrace;

namespace {

const LaurentPoly kQ = LaurentPoly::monomial(1, 2);
const LaurentPoly kQInv = LaurentPoly::monomial(1, -2);
const LaurentPoly kOne(1);

HeckeElement random_element(const CartanDatum& d, std::mt19937_64& rng, int terms = 4) {
  std::uniform_int_distribution<std::size_t> pick(0, d.order() - 1);
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> e(-3, 3);
  HeckeElement h(d);
  for (int k = 0; k < terms; ++k) h.add(static_cast<ElementId>(pick(rng)), LaurentPoly::monomial(c(rng), e(rng)));
  return h;
}

}  // namespace

TEST(HeckeElement, BasisChangeRoundTrip) {
  const auto d = parse_type("B2");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const HeckeElement h = random_element(*d, rng);
    EXPECT_EQ(h.to_tilde().to_T().terms(), h.terms());
    EXPECT_EQ(h.to_tilde(), h);
  }
  const HeckeElement tt = t_tilde(element_from_word(*d, {1, 2}));
  EXPECT_EQ(tt.to_T().coeff(d->from_word({1, 2})), LaurentPoly::monomial(1, -2));
}

TEST(HeckeElement, QuadraticRelation) {
  const auto d = parse_type("A1");
  const HeckeElement ts = t(element_from_word(*d, {1}));
  const HeckeElement lhs = ts * ts;
  EXPECT_EQ(lhs.coeff(0), kQ);
  EXPECT_EQ(lhs.coeff(1), kQ - kOne);
  const HeckeElement one = HeckeElement::scalar(*d, kOne);
  EXPECT_TRUE(((ts - kQ * one) * (ts + one)).is_zero());
}

TEST(HeckeElement, BraidRelationsAndLengthAdditivity) {
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    SCOPED_TRACE(type);
    const auto d = parse_type(type);
    for (const auto& x : enumerate(*d))
      for (const auto& y : enumerate(*d)) {
        if (x.length() + y.length() != (x * y).length()) continue;
        EXPECT_EQ(t(x) * t(y), t(x * y));
      }
    for (int s = 1; s <= d->rank(); ++s)
      for (int u = s + 1; u <= d->rank(); ++u) {
        const int m = d->coxeter_exponent(s, u);
        HeckeElement a = HeckeElement::scalar(*d, kOne);
        HeckeElement b = HeckeElement::scalar(*d, kOne);
        for (int k = 0; k < m; ++k) {
          a = a * t(element_from_word(*d, {k % 2 == 0 ? s : u}));
          b = b * t(element_from_word(*d, {k % 2 == 0 ? u : s}));
        }
        EXPECT_EQ(a, b);
      }
  }
}

TEST(HeckeElement, MultiplicationMatchesRegularRepresentationOracle) {
  for (const char* type : {"A2", "B2", "A1xA2"}) {
    SCOPED_TRACE(type);
    const auto d = parse_type(type);
    for (std::size_t w = 0; w < d->order(); ++w)
      for (std::size_t x = 0; x < d->order(); ++x) {
        const HeckeElement prod = t(WeylElement(*d, static_cast<ElementId>(w))) * t(WeylElement(*d, static_cast<ElementId>(x)));
        const oracle::Vec expected =
            oracle::apply_tw(*d, static_cast<ElementId>(w), oracle::basis_vector(*d, static_cast<ElementId>(x)));
        for (std::size_t z = 0; z < d->order(); ++z) ASSERT_EQ(prod.coeff(static_cast<ElementId>(z)), expected[z]);
      }
  }
}

TEST(HeckeElement, AssociativeAndDistributiveOnRandomElements) {
  const auto d = parse_type("B3");
  std::mt19937_64 rng(42);
  for (int i = 0; i < 20; ++i) {
    const HeckeElement a = random_element(*d, rng, 3);
    const HeckeElement b = random_element(*d, rng, 3);
    const HeckeElement c = random_element(*d, rng, 3);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(HeckeElement, ProductKeepsLeftBasis) {
  const auto d = parse_type("A2");
  const HeckeElement a = t_tilde(element_from_word(*d, {1}));
  const HeckeElement b = t(element_from_word(*d, {2}));
  EXPECT_EQ((a * b).basis(), Basis::Tilde);
  EXPECT_EQ((b * a).basis(), Basis::T);
  EXPECT_EQ(a * b, a.to_T() * b);
}

TEST(HeckeElement, MixedDataRejected) {
  const auto a = parse_type("A1");
  const auto b = parse_type("A1");
  EXPECT_THROW(t(WeylElement(*a, 1)) * t(WeylElement(*b, 1)), InvalidArgument);
}

TEST(Inverse, GeneratorInverseInA1) {
  const auto d = parse_type("A1");
  const HeckeElement inv = invert_t(element_from_word(*d, {1}));
  EXPECT_EQ(inv.coeff(1), kQInv);
  EXPECT_EQ(inv.coeff(0), -(kOne - kQInv));
}

TEST(Inverse, TwoSidedInverseEverywhere) {
  for (const char* type : {"A2", "B2", "G2", "A3", "B3"}) {
    SCOPED_TRACE(type);
    const auto d = parse_type(type);
    const HeckeElement one = HeckeElement::scalar(*d, kOne);
    for (const auto& w : enumerate(*d)) {
      const HeckeElement inv = invert_t(w);
      ASSERT_EQ(inv * t(w), one);
      ASSERT_EQ(t(w) * inv, one);
    }
  }
}

TEST(Inverse, InA2LongestCoxeterProduct) {
  const auto d = parse_type("A2");
  const WeylElement w = element_from_word(*d, {1, 2});
  const HeckeElement lhs = kQ * kQ * invert_t(inverse(w));
  EXPECT_EQ(lhs.coeff(0), (kQ - kOne) * (kQ - kOne));
  EXPECT_EQ(lhs.coeff(w.id()), kOne);
}

TEST(Inverse, IndependentOfReducedWord) {
  for (const char* type : {"A3", "B3", "G2"}) {
    const auto d = parse_type(type);
    for (const auto& w : enumerate(*d))
      EXPECT_EQ(invert_word(*d, reduced_word_largest_first(w)), invert_word(*d, w.reduced_word()));
  }
}

TEST(Inverse, RejectsNonReducedWords) {
  const auto d = parse_type("A2");
  EXPECT_THROW(invert_word(*d, {1, 1}), InvalidArgument);
  EXPECT_THROW(invert_word(*d, {1, 2, 1, 2}), InvalidArgument);
  EXPECT_THROW(invert_word(*d, {4}), InvalidArgument);
}

TEST(StructConst, Examples) {
  const auto a1 = parse_type("A1");
  const WeylElement e1(*a1, 0);
  const WeylElement s(*a1, 1);
  EXPECT_EQ(struct_const(s, s, s), LaurentPoly::delta());
  EXPECT_EQ(struct_const(s, s, e1), kOne);
  for (const auto& z : enumerate(*a1))
    for (const auto& zp : enumerate(*a1)) EXPECT_EQ(struct_const(e1, z, zp), z == zp ? kOne : LaurentPoly{});

  const auto a2 = parse_type("A2");
  const WeylElement c = element_from_word(*a2, {1, 2});
  LaurentPoly diag;
  for (const auto& z : enumerate(*a2)) diag += struct_const(c, z, z);
  EXPECT_EQ(diag, LaurentPoly::delta() * LaurentPoly::delta());
}

TEST(StructConst, AgreesWithTildeProducts) {
  for (const char* type : {"B2", "G2", "A3"}) {
    SCOPED_TRACE(type);
    const auto d = parse_type(type);
    StructConstCache cache(*d);
    TildeWorkspace ws(*d);
    for (const auto& y : enumerate(*d))
      for (const auto& z : enumerate(*d)) {
        const HeckeElement prod = t_tilde(y) * t_tilde(z);
        const auto sparse = ws.product(y.id(), z.id());
        for (const auto& zp : enumerate(*d)) {
          const LaurentPoly c = cache.get(y.id(), z.id(), zp.id());
          ASSERT_EQ(c, prod.coeff(zp.id()));
          ASSERT_EQ(c, sparse_coeff(sparse, zp.id()));
        }
      }
  }
}

TEST(StructConst, CacheBudget) {
  const auto d = parse_type("B3");
  StructConstCache cache(*d, 10);
  EXPECT_THROW(
      {
        for (std::size_t z = 0; z < d->order(); ++z) cache.get(static_cast<ElementId>(d->order() - 1), 0, static_cast<ElementId>(z));
      },
      BudgetExceeded);
}

TEST(Expr, Examples) {
  const auto a1 = parse_type("A1");
  const HeckeElement sq = parse_hecke_expr(*a1, "T[1]*T[1]");
  EXPECT_EQ(sq.coeff(0), kQ);
  EXPECT_EQ(sq.coeff(1), kQ - kOne);
  EXPECT_EQ(sq.terms().size(), 2u);

  const auto a2 = parse_type("A2");
  const HeckeElement h = parse_hecke_expr(*a2, "(q-1)*T[e] + T[12]");
  EXPECT_EQ(h.coeff(0), kQ - kOne);
  EXPECT_EQ(h.coeff(a2->from_word({1, 2})), kOne);
  EXPECT_EQ(h.terms().size(), 2u);

  EXPECT_THROW(parse_hecke_expr(*a2, "T[999]"), ParseError);
}

TEST(Expr, GrammarCoverage) {
  const auto a2 = parse_type("A2");
  const WeylElement s1 = element_from_word(*a2, {1});
  EXPECT_EQ(parse_hecke_expr(*a2, "Tt[1]"), t_tilde(s1));
  EXPECT_EQ(parse_hecke_expr(*a2, "v*Tt[1]"), t(s1));
  EXPECT_EQ(parse_hecke_expr(*a2, "T[1]^2 - (q-1)*T[1] - q*T[e]"), HeckeElement(*a2));
  EXPECT_EQ(parse_hecke_expr(*a2, "T[1]^0"), HeckeElement::scalar(*a2, kOne));
  EXPECT_EQ(parse_hecke_expr(*a2, "T[121] - T[212]"), HeckeElement(*a2));
  EXPECT_EQ(parse_hecke_expr(*a2, "-T[1] + T[1]"), HeckeElement(*a2));
  EXPECT_EQ(parse_hecke_expr(*a2, " 2 * ( T[ 1 ] ) "), LaurentPoly(2) * t(s1));
  EXPECT_EQ(parse_hecke_expr(*a2, "T[]"), HeckeElement::scalar(*a2, kOne));
  EXPECT_EQ(parse_hecke_expr(*a2, "T[1,2]"), parse_hecke_expr(*a2, "T[12]"));
  EXPECT_EQ(parse_hecke_expr(*a2, "123456789012345678901234567890").coeff(0), LaurentPoly(Integer("123456789012345678901234567890")));
}

TEST(Expr, NonReducedWordsAreGeneratorProducts) {
  const auto a2 = parse_type("A2");
  EXPECT_EQ(parse_hecke_expr(*a2, "T[11]"), parse_hecke_expr(*a2, "T[1]*T[1]"));
  EXPECT_EQ(parse_hecke_expr(*a2, "Tt[11]"), parse_hecke_expr(*a2, "Tt[1]*Tt[1]"));
}

TEST(Expr, ErrorsCarryPositions) {
  const auto a2 = parse_type("A2");
  auto position = [&](const char* text) -> std::size_t {
    try {
      parse_hecke_expr(*a2, text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position("T[1] + * 2"), 7u);
  EXPECT_EQ(position("T[3]"), 2u);
  EXPECT_EQ(position("(T[1]"), 5u);
  EXPECT_EQ(position("T[1"), 3u);
  EXPECT_EQ(position("x"), 0u);
  EXPECT_EQ(position("T(1)"), 1u);
  EXPECT_EQ(position("T[1]^"), 5u);
  EXPECT_EQ(position("T[1]^100"), 5u);
  EXPECT_EQ(position("T[1] T[2]"), 5u);
  EXPECT_EQ(position(""), 0u);
}
