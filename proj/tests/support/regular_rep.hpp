#pragma once

// Independent oracle: the left regular representation of H written out densely in the T basis.
// Uses only the group tables (left multiplication, lengths), never the library's Hecke code.

#include <vector>

#include "hecketrace/cartan.hpp"
#include "hecketrace/laurent_poly.hpp"
#include "hecketrace/qpoly.hpp"

namespace oracle {

using hecketrace::CartanDatum;
using hecketrace::ElementId;
using hecketrace::LaurentPoly;

using Vec = std::vector<LaurentPoly>;

inline LaurentPoly q() { return LaurentPoly::monomial(1, 2); }
inline LaurentPoly q_inv() { return LaurentPoly::monomial(1, -2); }

/// T_s . v, from T_s T_x = T_{sx} (sx > x) and T_s T_x = q T_{sx} + (q - 1) T_x (sx < x).
inline Vec apply_generator(const CartanDatum& d, int s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (v[x].is_zero()) continue;
    const auto xid = static_cast<ElementId>(x);
    const ElementId sx = d.left_mul(s, xid);
    if (d.length(sx) > d.length(xid)) {
      out[sx] += v[x];
    } else {
      out[sx] += q() * v[x];
      out[x] += (q() - LaurentPoly(1)) * v[x];
    }
  }
  return out;
}

/// T_s^{-1} . v = q^{-1} T_s v - (1 - q^{-1}) v.
inline Vec apply_generator_inverse(const CartanDatum& d, int s, const Vec& v) {
  Vec out = apply_generator(d, s, v);
  for (std::size_t x = 0; x < v.size(); ++x) out[x] = q_inv() * out[x] - (LaurentPoly(1) - q_inv()) * v[x];
  return out;
}

inline Vec basis_vector(const CartanDatum& d, ElementId x) {
  Vec v(d.order());
  v[x] = LaurentPoly(1);
  return v;
}

/// T_w . T_x for a reduced word of w, applied right to left.
inline Vec apply_tw(const CartanDatum& d, ElementId w, Vec v) {
  const auto& word = d.reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator(d, *it, v);
  return v;
}

/// Trace of h -> T_w h on H, as a polynomial in q.
inline hecketrace::QPoly trace(const CartanDatum& d, ElementId w) {
  LaurentPoly total;
  for (std::size_t x = 0; x < d.order(); ++x) {
    const auto xid = static_cast<ElementId>(x);
    total += apply_tw(d, w, basis_vector(d, xid))[x];
  }
  return hecketrace::qpoly_from_laurent(total, 0);
}

/// R_{z,w,q} for every z, read off (-q)^{|w|} T_{w^{-1}}^{-1} = sum_z (-1)^{|z|} R_{z,w,q} T_z.
/// With w = s_1 ... s_k, T_{w^{-1}}^{-1} = T_{s_1}^{-1} ... T_{s_k}^{-1}.
inline std::vector<hecketrace::QPoly> r_column(const CartanDatum& d, ElementId w) {
  Vec v = basis_vector(d, d.identity());
  const auto& word = d.reduced_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = apply_generator_inverse(d, *it, v);
  const int len = d.length(w);
  const LaurentPoly scale = LaurentPoly::monomial(len % 2 == 0 ? 1 : -1, 2 * len);
  std::vector<hecketrace::QPoly> out;
  for (std::size_t z = 0; z < d.order(); ++z) {
    LaurentPoly c = scale * v[z];
    if (d.length(static_cast<ElementId>(z)) % 2 != 0) c = -c;
    out.push_back(hecketrace::qpoly_from_laurent(c, 0));
  }
  return out;
}

}  // namespace oracle
