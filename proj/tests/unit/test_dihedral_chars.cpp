#include <algorithm>
#include <array>
#include <functional>

#include <gtest/gtest.h>

#include "hecketrace/context.hpp"

using namespace hecketrace;

namespace {

const QPoly kQ = QPoly::q();
const QPoly kOne(1);
const std::vector<const char*> kRankAtMostTwo{"A1", "A1xA1", "A2", "B2", "C2", "G2"};

std::vector<int> sorted_dims(const CharacterTable& t) {
  std::vector<int> out;
  for (const auto& e : t.irreps()) out.push_back(e.dim);
  std::sort(out.begin(), out.end());
  return out;
}

/// Twisted trace with the multiplicity of E in R^1_y taken to be tr(y, E).
QPoly tau_y_character_multiplicity(const CharacterTable& t, ElementId w, ElementId y) {
  QPoly out;
  for (std::size_t k = 0; k < t.irreps().size(); ++k) out += t.value(k, w) * QPoly(t.weyl_value(k, y));
  return out;
}

QRational twisted_sum_with(const CharacterTable& t, ElementId w, QPoly (*ty)(const CharacterTable&, ElementId, ElementId)) {
  const CartanDatum& d = t.datum();
  QRational sum;
  for (std::size_t y = 0; y < d.order(); ++y)
    sum += QRational(ty(t, w, static_cast<ElementId>(y)), d.char_poly(static_cast<ElementId>(y)));
  return sum / QRational(QPoly(Integer(static_cast<unsigned long>(d.order()))));
}

// Fourier pairing of a family indexed by pairs (x, sigma), x in a finite group up to conjugacy and
// sigma an irreducible character of its centralizer:
//   {(x,s),(y,t)} = |C(x)|^-1 |C(y)|^-1 sum_{g : x and g y g^-1 commute} s(g y g^-1) conj(t(g^-1 x g)).
// Characters take values in Q(omega), omega^3 = 1, written a + b c with c^2 = -3.
using Cyclo = QuadExt<Rational>;
using Perm = std::array<int, 3>;

Cyclo cyclo(const Rational& a, const Rational& b = 0) { return Cyclo(a, b, Rational(-3)); }

Perm compose(const Perm& a, const Perm& b) { return {a[b[0]], a[b[1]], a[b[2]]}; }

Perm invert(const Perm& a) {
  Perm out{};
  for (int i = 0; i < 3; ++i) out[a[i]] = i;
  return out;
}

struct FamilyMember {
  Perm x;
  std::function<Cyclo(const Perm&)> sigma;
};

struct Family {
  const char* type;
  std::vector<Perm> group;
  std::vector<FamilyMember> members;
  /// Character-table labels for the principal-series members, in member order.
  std::vector<std::string> labels;
};

std::vector<std::vector<Cyclo>> family_fourier(const Family& f) {
  auto centralizer = [&](const Perm& x) {
    std::size_t n = 0;
    for (const Perm& g : f.group) n += compose(g, x) == compose(x, g);
    return n;
  };
  const std::size_t n = f.members.size();
  std::vector<std::vector<Cyclo>> out(n, std::vector<Cyclo>(n, cyclo(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [x, s] = f.members[i];
      const auto& [y, t] = f.members[j];
      Cyclo sum = cyclo(0);
      for (const Perm& g : f.group) {
        const Perm gyg = compose(compose(g, y), invert(g));
        if (compose(x, gyg) != compose(gyg, x)) continue;
        sum = sum + s(gyg) * t(compose(compose(invert(g), x), g)).conj();
      }
      const Integer size(static_cast<unsigned long>(centralizer(x) * centralizer(y)));
      out[i][j] = cyclo(sum.a() / Rational(size), sum.b() / Rational(size));
    }
  return out;
}

int fixed_points(const Perm& p) { return (p[0] == 0) + (p[1] == 1) + (p[2] == 2); }

/// B2 family over Z/2, realised inside S3 as <(0 1)>; (g, sign) is the cuspidal member.
Family z2_family() {
  const Perm e{0, 1, 2};
  const Perm g{1, 0, 2};
  auto one = [](const Perm&) { return cyclo(1); };
  auto sign = [](const Perm& p) { return cyclo(fixed_points(p) == 3 ? 1 : -1); };
  return {"B2", {e, g}, {{e, one}, {e, sign}, {g, one}, {g, sign}}, {"rho1", "mixed1", "mixed2"}};
}

/// G2 family over S3; members (1,1), (1,r), (g2,1), (g3,1) are principal series, the rest cuspidal.
Family s3_family() {
  std::vector<Perm> s3;
  Perm p{0, 1, 2};
  do s3.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const Perm e{0, 1, 2};
  const Perm g2{1, 0, 2};
  const Perm g3{1, 2, 0};
  auto one = [](const Perm&) { return cyclo(1); };
  auto sign = [](const Perm& q) { return cyclo(fixed_points(q) == 1 ? -1 : 1); };
  auto refl = [](const Perm& q) { return cyclo(fixed_points(q) - 1); };
  // theta(g3) = omega = (-1 + c) / 2, theta(g3^2) = omega^2 = (-1 - c) / 2.
  auto theta = [g3](const Perm& q) {
    if (q == g3) return cyclo(Rational(-1, 2), Rational(1, 2));
    if (fixed_points(q) == 3) return cyclo(1);
    return cyclo(Rational(-1, 2), Rational(-1, 2));
  };
  auto theta2 = [theta](const Perm& q) { return theta(q).conj(); };
  return {"G2",
          s3,
          {{e, one}, {e, refl}, {g2, one}, {g3, one}, {e, sign}, {g2, sign}, {g3, theta}, {g3, theta2}},
          {"rho1", "mixed1", "rho2", "mixed2"}};
}

QPoly tau_y_library(const CharacterTable& t, ElementId w, ElementId y) { return tau_y(t, w, y); }

}  // namespace

TEST(CharacterTable, Examples) {
  const auto a1 = parse_type("A1");
  const CharacterTable t1(*a1);
  ASSERT_EQ(t1.irreps().size(), 2u);
  EXPECT_EQ(t1.value(0, 1), kQ);
  EXPECT_EQ(t1.value(1, 1), QPoly(-1));

  const auto a2 = parse_type("A2");
  const CharacterTable t2(*a2);
  EXPECT_EQ(sorted_dims(t2), (std::vector<int>{1, 1, 2}));
  const HeckeIrrep& rho1 = t2.find("rho1");
  EXPECT_EQ(char_value(rho1, *a2, a2->from_word({1, 2})), -kQ);
  EXPECT_EQ(w_char_value(rho1, *a2, a2->from_word({1, 2})), Integer(-1));

  const auto g2 = parse_type("G2");
  const CharacterTable t3(*g2);
  EXPECT_EQ(sorted_dims(t3), (std::vector<int>{1, 1, 1, 1, 2, 2}));
  int squares = 0;
  for (int dim : sorted_dims(t3)) squares += dim * dim;
  EXPECT_EQ(squares, 12);
}

TEST(CharacterTable, IndexAndSignCharacters) {
  for (const char* type : kRankAtMostTwo) {
    const auto d = parse_type(type);
    const CharacterTable t(*d);
    const HeckeIrrep& index = t.find("index");
    const HeckeIrrep& sign = t.find("sign");
    for (const auto& w : enumerate(*d)) {
      EXPECT_EQ(char_value(index, *d, w.id()), QPoly::monomial(1, w.length()));
      EXPECT_EQ(char_value(sign, *d, w.id()), QPoly(w.length() % 2 == 0 ? 1 : -1));
    }
  }
}

TEST(CharacterTable, ConstructionChecksPass) {
  for (const char* type : kRankAtMostTwo) {
    SCOPED_TRACE(type);
    const auto d = parse_type(type);
    const CharTableChecks c = CharacterTable(*d).checks();
    EXPECT_TRUE(c.quadratic);
    EXPECT_TRUE(c.braid);
    EXPECT_TRUE(c.dim_squares);
    EXPECT_TRUE(c.orthonormal);
    EXPECT_TRUE(c.reflection_match);
    EXPECT_TRUE(c.integral_characters);
    EXPECT_TRUE(c.multiplicities);
  }
}

TEST(CharacterTable, RejectsRankThree) {
  const auto d = parse_type("A3");
  EXPECT_THROW(CharacterTable{*d}, UnsupportedType);
  EXPECT_THROW(hecke_character_table(*parse_type("A1xA1xA1")), UnsupportedType);
}

TEST(CharacterTable, ValuesAgreeOnSameLengthConjugates) {
  for (const char* type : kRankAtMostTwo) {
    const auto d = parse_type(type);
    const CharacterTable t(*d);
    for (const auto& c : d->classes())
      for (ElementId a : c.members)
        for (ElementId b : c.members) {
          if (d->length(a) != d->length(b)) continue;
          for (std::size_t k = 0; k < t.irreps().size(); ++k) EXPECT_EQ(t.value(k, a), t.value(k, b));
        }
  }
}

TEST(CharacterTable, RepresentationOfArbitraryElements) {
  const auto d = parse_type("B2");
  const CharacterTable tab(*d);
  const HeckeElement h = t_tilde(element_from_word(*d, {1})) + LaurentPoly(3) * t(element_from_word(*d, {2, 1}));
  for (const auto& e : tab.irreps()) {
    const RepMatrix m = rep_image(e, h);
    const RepMatrix sum =
        detail::qscalar(LaurentPoly::monomial(1, -1), e.csq) * rep_image(e, *d, d->from_word({1})) +
        detail::qscalar(LaurentPoly(3), e.csq) * rep_image(e, *d, d->from_word({2, 1}));
    EXPECT_EQ(m, sum);
  }
}

TEST(Fourier, PrincipalSeriesBlockOfTheFamilyMatrix) {
  for (const auto& family : {z2_family(), s3_family()}) {
    SCOPED_TRACE(family.type);
    const auto full = family_fourier(family);
    const std::size_t n = full.size();
    // The full pairing is a symmetric involution.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(full[i][j], full[j][i]);
        Cyclo sq = cyclo(0);
        for (std::size_t k = 0; k < n; ++k) sq = sq + full[i][k] * full[k][j];
        EXPECT_EQ(sq, cyclo(i == j ? 1 : 0));
      }
    const auto d = parse_type(family.type);
    const CharacterTable t(*d);
    std::vector<std::size_t> idx;
    for (const auto& label : t.irreps()) idx.push_back(family.labels.size());
    for (std::size_t k = 0; k < t.irreps().size(); ++k)
      for (std::size_t p = 0; p < family.labels.size(); ++p)
        if (family.labels[p] == t.irreps()[k].label) idx[k] = p;
    for (std::size_t a = 0; a < t.irreps().size(); ++a)
      for (std::size_t b = 0; b < t.irreps().size(); ++b) {
        const bool in_family = idx[a] < family.labels.size() && idx[b] < family.labels.size();
        const Cyclo expected = in_family ? full[idx[a]][idx[b]] : cyclo(a == b ? 1 : 0);
        EXPECT_EQ(cyclo(t.fourier()[a][b]), expected) << t.irreps()[a].label << " " << t.irreps()[b].label;
      }
    for (std::size_t k = 0; k < t.irreps().size(); ++k) EXPECT_EQ(t.unipotent_multiplicity(k, d->identity()), t.irreps()[k].dim);
  }
}

TEST(Fourier, SymmetricWithPositiveSemidefiniteDefect) {
  for (const char* type : kRankAtMostTwo) {
    SCOPED_TRACE(type);
    const auto d = parse_type(type);
    const CharacterTable t(*d);
    const auto& f = t.fourier();
    for (std::size_t i = 0; i < f.size(); ++i) {
      Rational row = 0;
      for (std::size_t k = 0; k < f.size(); ++k) {
        EXPECT_EQ(f[i][k], f[k][i]);
        row += f[i][k] * f[k][i];
      }
      EXPECT_LE(row, 1);
    }
  }
}

TEST(Fourier, TrivialInTypeA) {
  for (const char* type : {"A1", "A1xA1", "A2"}) {
    const auto d = parse_type(type);
    const CharacterTable t(*d);
    for (std::size_t k = 0; k < t.irreps().size(); ++k)
      for (std::size_t y = 0; y < d->order(); ++y)
        EXPECT_EQ(t.unipotent_multiplicity(k, static_cast<ElementId>(y)), t.weyl_value(k, static_cast<ElementId>(y)));
  }
}

TEST(TwistedTrace, Examples) {
  const auto a1 = parse_type("A1");
  const CharacterTable t1(*a1);
  EXPECT_EQ(tau_y(t1, 1, 1), kQ + kOne);

  // tr(T_c, E) is q^2, 1, -q and tr(c, E) is 1, 1, -1 on index, sign, rho1.
  const auto a2 = parse_type("A2");
  const CharacterTable t2(*a2);
  const ElementId c = a2->from_word({1, 2});
  EXPECT_EQ(tau_y(t2, c, c), kQ * kQ + kQ + kOne);
}

TEST(TwistedTrace, IdentityTwistIsTau) {
  for (const char* type : kRankAtMostTwo) {
    const auto ctx = HeckeContext::create(type);
    const CharacterTable& t = ctx->characters();
    for (std::size_t w = 0; w < ctx->datum().order(); ++w) {
      const auto id = static_cast<ElementId>(w);
      EXPECT_EQ(tau_y(t, id, ctx->datum().identity()), ctx->traces().get(id).tau_q);
    }
  }
}

TEST(DimR1, Examples) {
  const auto a2 = parse_type("A2");
  EXPECT_EQ(dim_r1(*a2, 0).is_polynomial(), a2->poincare());
  const QPoly cube = QPoly::q_integer(3);
  EXPECT_EQ(dim_r1(*a2, a2->from_word({1})).is_polynomial(), -((kQ - kOne) * cube));
  EXPECT_EQ(dim_r1(*a2, a2->from_word({1, 2})).is_polynomial(), (kOne + kQ) * (kQ - kOne) * (kQ - kOne));
}

TEST(DimR1, PolynomialInEveryType) {
  for (const char* type : {"A1", "G2", "A3", "B3", "D4", "F4", "A1xB3"}) {
    SCOPED_TRACE(type);
    const auto d = parse_type(type);
    for (std::size_t y = 0; y < d->order(); ++y) {
      const QRational r = dim_r1(*d, static_cast<ElementId>(y));
      ASSERT_TRUE(r.is_polynomial().has_value());
      // R^1_y has virtual dimension +-W(q)(q-1)^r / det(q-y); at y = 1 it is the flag count.
      if (y == 0) EXPECT_EQ(*r.is_polynomial(), d->poincare());
    }
  }
}

TEST(AChain, IdentityTwistTermAndSum) {
  for (const char* type : kRankAtMostTwo) {
    SCOPED_TRACE(type);
    const auto ctx = HeckeContext::create(type);
    const CartanDatum& d = ctx->datum();
    const CharacterTable& t = ctx->characters();
    for (std::size_t w = 0; w < d.order(); ++w) {
      const auto id = static_cast<ElementId>(w);
      EXPECT_EQ(a_wy(t, id, d.identity()), QRational(QPoly::monomial(1, d.nu()) * ctx->traces().get(id).tau_q));
      const AChainCheck c = verify_a_chain(t, ctx->rpolys(), id);
      EXPECT_TRUE(c.holds()) << word_to_string(d.reduced_word(id));
    }
  }
}

TEST(AChain, SimplifiedForm) {
  const auto d = parse_type("B2");
  const CharacterTable t(*d);
  for (std::size_t w = 0; w < d->order(); ++w)
    for (std::size_t y = 0; y < d->order(); ++y) {
      const auto wid = static_cast<ElementId>(w);
      const auto yid = static_cast<ElementId>(y);
      const QRational simplified(QPoly::monomial(1, d->nu()) * QPoly::q_minus_one_power(d->rank()) * tau_y(t, wid, yid),
                                 d->char_poly(yid));
      EXPECT_EQ(a_wy(t, wid, yid), simplified);
    }
}

TEST(TwistedTraceIdentity, HoldsInEveryRankTwoType) {
  std::size_t checks = 0;
  for (const char* type : kRankAtMostTwo) {
    SCOPED_TRACE(type);
    const auto ctx = HeckeContext::create(type);
    for (std::size_t w = 0; w < ctx->datum().order(); ++w) {
      const TwistedTraceCheck c = verify_twisted_trace_identity(ctx->characters(), ctx->rpolys(), static_cast<ElementId>(w));
      EXPECT_TRUE(c.holds()) << word_to_string(ctx->datum().reduced_word(static_cast<ElementId>(w))) << " lhs "
                             << c.lhs.to_string() << " rhs " << c.rhs.to_string();
      ++checks;
    }
  }
  EXPECT_EQ(checks, 2u + 4u + 6u + 8u + 8u + 12u);
}

TEST(TwistedTraceIdentity, A1ReflectionValue) {
  const auto ctx = HeckeContext::create("A1");
  const TwistedTraceCheck c = verify_twisted_trace_identity(ctx->characters(), ctx->rpolys(), 1);
  EXPECT_EQ(c.lhs, QRational(kOne));
  EXPECT_EQ(c.rhs, QRational(kOne));
}

TEST(TwistedTraceIdentity, PositiveExponentFormFails) {
  // R_{1,w}(q-1)^{+r} in place of (q-1)^{-r}: fails for every w.
  for (const char* type : kRankAtMostTwo) {
    const auto ctx = HeckeContext::create(type);
    const CartanDatum& d = ctx->datum();
    for (std::size_t w = 0; w < d.order(); ++w) {
      const auto id = static_cast<ElementId>(w);
      const QRational plus(r_poly(ctx->rpolys(), WeylElement(d, 0), WeylElement(d, id)).r_q *
                           QPoly::q_minus_one_power(d.rank()));
      EXPECT_NE(plus, twisted_trace_sum(ctx->characters(), id));
    }
  }
}

TEST(TwistedTraceIdentity, CharacterMultiplicitiesFailOutsideTypeA) {
  // With (F_E : R^1_y) = tr(y, E) the identity survives in type A and breaks in B2 and G2.
  auto failures = [](const char* type) {
    const auto ctx = HeckeContext::create(type);
    const CartanDatum& d = ctx->datum();
    int bad = 0;
    for (std::size_t w = 0; w < d.order(); ++w) {
      const auto id = static_cast<ElementId>(w);
      const QRational lhs(r_poly(ctx->rpolys(), WeylElement(d, 0), WeylElement(d, id)).r_q,
                          QPoly::q_minus_one_power(d.rank()));
      if (lhs != twisted_sum_with(ctx->characters(), id, tau_y_character_multiplicity)) ++bad;
      EXPECT_EQ(lhs, twisted_sum_with(ctx->characters(), id, tau_y_library));
    }
    return bad;
  };
  EXPECT_EQ(failures("A2"), 0);
  EXPECT_EQ(failures("A1xA1"), 0);
  EXPECT_GT(failures("B2"), 0);
  EXPECT_GT(failures("G2"), 0);
}

TEST(Duality, HoldsForEveryIrrepAndElement) {
  for (const char* type : kRankAtMostTwo) {
    SCOPED_TRACE(type);
    const auto ctx = HeckeContext::create(type);
    const CharacterTable& t = ctx->characters();
    for (std::size_t k = 0; k < t.irreps().size(); ++k)
      for (std::size_t w = 0; w < ctx->datum().order(); ++w)
        EXPECT_TRUE(verify_duality_char_identity(t, ctx->rpolys(), k, static_cast<ElementId>(w)))
            << t.irreps()[k].label << " " << w;
  }
}

TEST(Duality, TensorSignPairs) {
  const auto d = parse_type("B2");
  const CharacterTable t(*d);
  EXPECT_EQ(t.irreps()[t.tensor_sign(0)].label, "sign");
  for (std::size_t k = 0; k < t.irreps().size(); ++k) {
    EXPECT_EQ(t.tensor_sign(t.tensor_sign(k)), k);
    for (std::size_t y = 0; y < d->order(); ++y) {
      const auto id = static_cast<ElementId>(y);
      const int sgn = d->length(id) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(t.weyl_value(t.tensor_sign(k), id), sgn * t.weyl_value(k, id));
    }
  }
}
