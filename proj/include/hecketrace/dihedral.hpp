#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hecketrace/matrix.hpp"
#include "hecketrace/qrational.hpp"
#include "hecketrace/quad_ext.hpp"
#include "hecketrace/rpoly.hpp"
#include "hecketrace/trace.hpp"

namespace hecketrace {

using QuadLaurent = QuadExt<LaurentPoly>;
using RepMatrix = Matrix<QuadLaurent>;

/// Irreducible representation of H for a Weyl group of rank <= 2, given by generator images.
/// Labels: "index" (T_s -> q), "sign" (T_s -> -1), "mixed1"/"mixed2" (q on one generator class,
/// -1 on the other), "rho<j>" (two-dimensional, c_j^2 = 2 + 2 cos(2 pi j / m)).
struct HeckeIrrep {
  std::string label;
  int dim;
  /// c^2 for the two-dimensional models, 1 otherwise.
  LaurentPoly csq;
  /// gens[s - 1] is the image of T_s.
  std::vector<RepMatrix> gens;
};

namespace detail {

inline QuadLaurent qscalar(const LaurentPoly& a, const LaurentPoly& csq) { return QuadLaurent::scalar(a, csq); }

inline RepMatrix one_dim(const LaurentPoly& value, const LaurentPoly& csq) {
  return RepMatrix(1, qscalar(value, csq));
}

inline LaurentPoly qv() { return LaurentPoly::monomial(1, 2); }

/// Order of s1 s2 for a rank-2 datum; 1 for rank 1.
inline int dihedral_m(const CartanDatum& d) { return d.rank() == 1 ? 1 : d.coxeter_exponent(1, 2); }

/// Integer c_j^2 = 2 + 2 cos(2 pi j / m) for m in {3, 4, 6}.
inline int c_squared(int m, int j) {
  if (m == 3 && j == 1) return 1;
  if (m == 4 && j == 1) return 2;
  if (m == 6 && j == 1) return 3;
  if (m == 6 && j == 2) return 1;
  throw UnsupportedType("no two-dimensional model for m=" + std::to_string(m) + " j=" + std::to_string(j));
}

}  // namespace detail

inline void require_rank_at_most_two(const CartanDatum& d) {
  if (d.rank() > 2)
    throw UnsupportedType("character tables are available in rank <= 2 only, not for " + d.type_spec());
}

/// Image of T_w: product of generator images along the reduced word of w.
inline RepMatrix rep_image(const HeckeIrrep& e, const CartanDatum& d, ElementId w) {
  const auto dim = static_cast<std::size_t>(e.dim);
  RepMatrix out = RepMatrix::identity(dim, detail::qscalar(0, e.csq), detail::qscalar(1, e.csq));
  for (int s : d.reduced_word(w)) out = out * e.gens[static_cast<std::size_t>(s - 1)];
  return out;
}

/// Image of an arbitrary element of H.
inline RepMatrix rep_image(const HeckeIrrep& e, const HeckeElement& h) {
  const HeckeElement ht = h.to_T();
  const auto dim = static_cast<std::size_t>(e.dim);
  RepMatrix out(dim, detail::qscalar(0, e.csq));
  for (const auto& [w, c] : ht.terms()) out = out + detail::qscalar(c, e.csq) * rep_image(e, h.datum(), w);
  return out;
}

/// tr(T_w, E) in Z[q]. Throws when the trace leaves Z[q] (odd powers of c must cancel).
inline QPoly char_value(const HeckeIrrep& e, const CartanDatum& d, ElementId w) {
  const QuadLaurent tr = rep_image(e, d, w).trace();
  if (!tr.b().is_zero())
    throw TheoremViolation("Hecke character values avoid c", e.label + " w=" + word_to_string(d.reduced_word(w)));
  return qpoly_from_laurent(tr.a(), 0);
}

/// tr(y, E) for the Weyl group: the character value at q = 1.
inline Integer w_char_value(const HeckeIrrep& e, const CartanDatum& d, ElementId y) {
  return char_value(e, d, y).evaluate(Integer(1));
}

/// Checks run on a character table.
struct CharTableChecks {
  bool quadratic = true;
  bool braid = true;
  bool dim_squares = true;
  bool orthonormal = true;
  /// The first two-dimensional model specialises to the reflection representation.
  bool reflection_match = true;
  bool integral_characters = true;
  /// Unipotent multiplicities are integers and reduce to dim E at y = 1.
  bool multiplicities = true;

  bool all() const {
    return quadratic && braid && dim_squares && orthonormal && reflection_match && integral_characters &&
           multiplicities;
  }
};

class CharacterTable {
 public:
  explicit CharacterTable(const CartanDatum& datum) : datum_(&datum) {
    require_rank_at_most_two(datum);
    build();
  }

  const CartanDatum& datum() const { return *datum_; }
  const std::vector<HeckeIrrep>& irreps() const { return irreps_; }

  const HeckeIrrep& find(const std::string& label) const {
    for (const auto& e : irreps_)
      if (e.label == label) return e;
    throw InvalidArgument("no irreducible representation labelled " + label);
  }

  const QPoly& value(std::size_t irrep, ElementId w) const { return hecke_values_[irrep][w]; }
  const Integer& weyl_value(std::size_t irrep, ElementId y) const { return weyl_values_[irrep][y]; }

  /// Index of E tensor sign, identified by its q -> 1 character.
  std::size_t tensor_sign(std::size_t irrep) const { return tensor_sign_[irrep]; }

  /// Fourier pairing {E, E'} between principal-series labels; block diagonal over families,
  /// the identity outside the non-trivial families of B2 and G2.
  const std::vector<std::vector<Rational>>& fourier() const { return fourier_; }

  /// Multiplicity of the principal-series unipotent representation attached to E in R^1_y:
  /// sum_{E'} {E, E'} tr(y, E').
  const Integer& unipotent_multiplicity(std::size_t irrep, ElementId y) const { return multiplicity_[irrep][y]; }

  CharTableChecks checks() const {
    const CartanDatum& d = *datum_;
    CharTableChecks out;
    const LaurentPoly q = detail::qv();
    for (const auto& e : irreps_) {
      const auto dim = static_cast<std::size_t>(e.dim);
      const RepMatrix id = RepMatrix::identity(dim, detail::qscalar(0, e.csq), detail::qscalar(1, e.csq));
      for (const auto& x : e.gens)
        if ((x - detail::qscalar(q, e.csq) * id) * (x + id) != RepMatrix(dim, detail::qscalar(0, e.csq)))
          out.quadratic = false;
      for (int s = 1; s <= d.rank(); ++s)
        for (int t = s + 1; t <= d.rank(); ++t) {
          const int m = d.coxeter_exponent(s, t);
          RepMatrix lhs = id;
          RepMatrix rhs = id;
          for (int k = 0; k < m; ++k) {
            lhs = lhs * e.gens[static_cast<std::size_t>(k % 2 == 0 ? s - 1 : t - 1)];
            rhs = rhs * e.gens[static_cast<std::size_t>(k % 2 == 0 ? t - 1 : s - 1)];
          }
          if (lhs != rhs) out.braid = false;
        }
    }
    Integer squares = 0;
    for (const auto& e : irreps_) squares += e.dim * e.dim;
    out.dim_squares = squares == Integer(static_cast<unsigned long>(d.order()));
    for (std::size_t a = 0; a < irreps_.size(); ++a)
      for (std::size_t b = 0; b < irreps_.size(); ++b) {
        Integer sum = 0;
        for (std::size_t y = 0; y < d.order(); ++y) sum += weyl_values_[a][y] * weyl_values_[b][y];
        const Integer expected = a == b ? Integer(static_cast<unsigned long>(d.order())) : Integer(0);
        if (sum != expected) out.orthonormal = false;
      }
    for (std::size_t k = 0; k < irreps_.size(); ++k) {
      if (irreps_[k].label != "rho1") continue;
      for (std::size_t y = 0; y < d.order(); ++y) {
        const IntMatrix m = d.matrix(static_cast<ElementId>(y));
        Integer tr = 0;
        for (std::size_t i = 0; i < m.size(); ++i) tr += m[i][i];
        if (tr != weyl_values_[k][y]) out.reflection_match = false;
      }
    }
    out.integral_characters = integral_;
    out.multiplicities = multiplicities_integral_;
    for (std::size_t k = 0; k < irreps_.size(); ++k)
      if (multiplicity_[k][d.identity()] != irreps_[k].dim) out.multiplicities = false;
    return out;
  }

 private:
  void build() {
    const CartanDatum& d = *datum_;
    const LaurentPoly q = detail::qv();
    const LaurentPoly one(1);
    const int r = d.rank();
    auto scalar_rep = [&](const std::string& label, const std::vector<LaurentPoly>& values) {
      HeckeIrrep e{label, 1, one, {}};
      for (const auto& x : values) e.gens.push_back(detail::one_dim(x, one));
      irreps_.push_back(std::move(e));
    };
    scalar_rep("index", std::vector<LaurentPoly>(static_cast<std::size_t>(r), q));
    scalar_rep("sign", std::vector<LaurentPoly>(static_cast<std::size_t>(r), LaurentPoly(-1)));
    const int m = detail::dihedral_m(d);
    if (r == 2 && m % 2 == 0) {
      scalar_rep("mixed1", {q, LaurentPoly(-1)});
      scalar_rep("mixed2", {LaurentPoly(-1), q});
    }
    for (int j = 1; r == 2 && 2 * j < m; ++j) {
      const LaurentPoly csq(detail::c_squared(m, j));
      const QuadLaurent zero = detail::qscalar(0, csq);
      const QuadLaurent vc(LaurentPoly{}, LaurentPoly::v(), csq);
      RepMatrix x1(2, zero);
      x1(0, 0) = detail::qscalar(-1, csq);
      x1(0, 1) = vc;
      x1(1, 1) = detail::qscalar(q, csq);
      RepMatrix x2(2, zero);
      x2(0, 0) = detail::qscalar(q, csq);
      x2(1, 0) = vc;
      x2(1, 1) = detail::qscalar(-1, csq);
      irreps_.push_back(HeckeIrrep{"rho" + std::to_string(j), 2, csq, {x1, x2}});
    }
    const std::size_t n = d.order();
    hecke_values_.assign(irreps_.size(), std::vector<QPoly>(n));
    weyl_values_.assign(irreps_.size(), std::vector<Integer>(n));
    for (std::size_t k = 0; k < irreps_.size(); ++k)
      for (std::size_t w = 0; w < n; ++w) {
        try {
          hecke_values_[k][w] = char_value(irreps_[k], d, static_cast<ElementId>(w));
        } catch (const TheoremViolation&) {
          integral_ = false;
        }
        weyl_values_[k][w] = hecke_values_[k][w].evaluate(Integer(1));
      }
    tensor_sign_.assign(irreps_.size(), irreps_.size());
    for (std::size_t a = 0; a < irreps_.size(); ++a)
      for (std::size_t b = 0; b < irreps_.size(); ++b) {
        bool match = true;
        for (std::size_t y = 0; y < n && match; ++y) {
          const Integer sgn = d.length(static_cast<ElementId>(y)) % 2 == 0 ? 1 : -1;
          match = weyl_values_[b][y] == sgn * weyl_values_[a][y];
        }
        if (match) tensor_sign_[a] = b;
      }
    build_fourier(m);
    multiplicity_.assign(irreps_.size(), std::vector<Integer>(n));
    for (std::size_t k = 0; k < irreps_.size(); ++k)
      for (std::size_t y = 0; y < n; ++y) {
        Rational acc = 0;
        for (std::size_t j = 0; j < irreps_.size(); ++j) acc += fourier_[k][j] * Rational(weyl_values_[j][y]);
        if (acc.get_den() != 1) multiplicities_integral_ = false;
        multiplicity_[k][y] = acc.get_num();
      }
    const CharTableChecks c = checks();
    if (!c.all()) throw TheoremViolation("character table invariants", d.type_spec());
  }

  /// Families: B2 {rho1, mixed1, mixed2} over Z/2 pairs (1,1), (1,eps), (g,1);
  /// G2 {rho1, mixed1, rho2, mixed2} over S3 pairs (1,1), (1,r), (g2,1), (g3,1).
  /// Cuspidal members of the families never occur in R^1_y for E in Irr(W) and are omitted.
  void build_fourier(int m) {
    const std::size_t n = irreps_.size();
    fourier_.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t k = 0; k < n; ++k) fourier_[k][k] = 1;
    auto idx = [&](const std::string& label) {
      for (std::size_t k = 0; k < n; ++k)
        if (irreps_[k].label == label) return k;
      throw Error("internal error: missing irreducible " + label);
    };
    auto fill = [&](const std::vector<std::string>& labels, const std::vector<std::vector<Rational>>& block) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j) fourier_[idx(labels[i])][idx(labels[j])] = block[i][j];
    };
    const Rational h(1, 2), t(1, 3), s(1, 6), tt(2, 3);
    if (m == 4) fill({"rho1", "mixed1", "mixed2"}, {{h, h, h}, {h, h, -h}, {h, -h, h}});
    if (m == 6)
      fill({"rho1", "mixed1", "rho2", "mixed2"},
           {{s, t, h, t}, {t, tt, Rational(0), -t}, {h, Rational(0), h, Rational(0)}, {t, -t, Rational(0), tt}});
  }

  const CartanDatum* datum_;
  std::vector<std::vector<Rational>> fourier_;
  std::vector<std::vector<Integer>> multiplicity_;
  bool multiplicities_integral_ = true;
  std::vector<HeckeIrrep> irreps_;
  std::vector<std::vector<QPoly>> hecke_values_;
  std::vector<std::vector<Integer>> weyl_values_;
  std::vector<std::size_t> tensor_sign_;
  bool integral_ = true;
};

inline CharacterTable hecke_character_table(const CartanDatum& d) { return CharacterTable(d); }

/// tau_y(w, q) = sum_E tr(T_w, E) (F_E : R^1_y).
inline QPoly tau_y(const CharacterTable& table, ElementId w, ElementId y) {
  QPoly out;
  for (std::size_t k = 0; k < table.irreps().size(); ++k)
    out += table.value(k, w) * QPoly(table.unipotent_multiplicity(k, y));
  return out;
}

/// (-1)^{|y|} W(q) (q - 1)^r / det(q - y) on the reflection representation. Any rank.
inline QRational dim_r1(const CartanDatum& d, ElementId y) {
  QPoly num = d.poincare() * QPoly::q_minus_one_power(d.rank());
  if (d.length(y) % 2 != 0) num = -num;
  return QRational(std::move(num), d.char_poly(y));
}

/// a_{w,y} = (-1)^{|y|} dim R^1_y tau_y(w, q) q^nu / W(q).
inline QRational a_wy(const CharacterTable& table, ElementId w, ElementId y) {
  const CartanDatum& d = table.datum();
  QRational out = dim_r1(d, y) * QRational(tau_y(table, w, y) * QPoly::monomial(1, d.nu()), d.poincare());
  return d.length(y) % 2 == 0 ? out : -out;
}

struct TwistedTraceCheck {
  WeylElement w;
  /// R_{1,w,q} (q - 1)^{-r}
  QRational lhs;
  /// |W|^{-1} sum_y tau_y(w, q) / det(q - y)
  QRational rhs;
  bool holds() const { return lhs == rhs; }
};

inline QRational twisted_trace_sum(const CharacterTable& table, ElementId w) {
  const CartanDatum& d = table.datum();
  QRational sum;
  for (std::size_t y = 0; y < d.order(); ++y) {
    const auto yid = static_cast<ElementId>(y);
    sum += QRational(tau_y(table, w, yid), d.char_poly(yid));
  }
  return sum * QRational(QPoly(1), QPoly(Integer(static_cast<unsigned long>(d.order()))));
}

inline TwistedTraceCheck verify_twisted_trace_identity(const CharacterTable& table, RPolyTable& rpolys, ElementId w) {
  const CartanDatum& d = table.datum();
  const RPoly r = r_poly(rpolys, WeylElement(d, d.identity()), WeylElement(d, w));
  QRational lhs(r.r_q, QPoly::q_minus_one_power(d.rank()));
  return TwistedTraceCheck{WeylElement(d, w), std::move(lhs), twisted_trace_sum(table, w)};
}

struct AChainCheck {
  WeylElement w;
  QRational sum_a;
  QRational expected;
  bool holds() const { return sum_a == expected; }
};

/// sum_y a_{w,y} against |W| q^nu R_{1,w,q}.
inline AChainCheck verify_a_chain(const CharacterTable& table, RPolyTable& rpolys, ElementId w) {
  const CartanDatum& d = table.datum();
  QRational sum;
  for (std::size_t y = 0; y < d.order(); ++y) sum += a_wy(table, w, static_cast<ElementId>(y));
  const RPoly r = r_poly(rpolys, WeylElement(d, d.identity()), WeylElement(d, w));
  QRational expected(QPoly(Integer(static_cast<unsigned long>(d.order()))) * QPoly::monomial(1, d.nu()) * r.r_q);
  return AChainCheck{WeylElement(d, w), std::move(sum), std::move(expected)};
}

/// tr(T_w, E) against tr((-q)^{|w|} T_{w^{-1}}^{-1}, E tensor sign), the latter expanded as
/// sum_z (-1)^{|z|} R_{z,w,q} tr(T_z, E tensor sign).
inline bool verify_duality_char_identity(const CharacterTable& table, RPolyTable& rpolys, std::size_t irrep,
                                         ElementId w) {
  const CartanDatum& d = table.datum();
  const std::size_t dual = table.tensor_sign(irrep);
  if (dual >= table.irreps().size()) return false;
  const auto col = rpolys.column(w);
  LaurentPoly rhs;
  for (std::size_t z = 0; z < d.order(); ++z) {
    const auto zid = static_cast<ElementId>(z);
    if ((*col)[z].is_zero()) continue;
    LaurentPoly term = (*col)[z].shifted(d.length(w) - d.length(zid)) * table.value(dual, zid).to_laurent();
    rhs += d.length(zid) % 2 == 0 ? term : -term;
  }
  return rhs == table.value(irrep, w).to_laurent();
}

}  // namespace hecketrace
