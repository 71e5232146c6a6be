#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hecketrace/hecke.hpp"
#include "hecketrace/qpoly.hpp"

namespace hecketrace {

/// R_{z,w,q} from (-q)^{|w|} T_{w^{-1}}^{-1} = sum_z (-1)^{|z|} R_{z,w,q} T_z,
/// with R~_{z,w} = v^{|z|-|w|} R_{z,w,q}.
struct RPoly {
  WeylElement z;
  WeylElement w;
  QPoly r_q;
  LaurentPoly r_tilde;
  /// R~_{z,w} = sum_k delta_coeffs[k] (v - v^{-1})^k; every entry is >= 0.
  std::vector<Integer> delta_coeffs;
};

/// Columns R~_{., w} indexed by z, memoised per w. Recursion on y with s its smallest left descent:
///   R~_{z,y} = R~_{sz,sy}                          if sz < z,
///   R~_{z,y} = (v - v^{-1}) R~_{z,sy} + R~_{sz,sy}  if sz > z,
/// and R~_{z,1} = [z = 1]. (R~_{z,sy} = R~_{sz,y} when sz > z, by the first line.)
class RPolyTable {
 public:
  using Column = std::vector<LaurentPoly>;

  explicit RPolyTable(const CartanDatum& datum) : datum_(&datum) {}

  const CartanDatum& datum() const { return *datum_; }

  std::shared_ptr<const Column> column(ElementId w) {
    std::lock_guard<std::mutex> lock(mutex_);
    return column_locked(w);
  }

  LaurentPoly r_tilde(ElementId z, ElementId w) { return (*column(w))[z]; }

  std::size_t cached_columns() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return columns_.size();
  }

 private:
  std::shared_ptr<const Column> column_locked(ElementId y) {
    if (auto it = columns_.find(y); it != columns_.end()) return it->second;
    const CartanDatum& d = *datum_;
    auto col = std::make_shared<Column>(d.order());
    if (y == d.identity()) {
      (*col)[d.identity()] = LaurentPoly(1);
    } else {
      const int s = d.first_left_descent(y);
      const std::shared_ptr<const Column> prev = column_locked(d.left_mul(s, y));
      for (std::size_t z = 0; z < d.order(); ++z) {
        const auto zid = static_cast<ElementId>(z);
        const ElementId sz = d.left_mul(s, zid);
        if (d.length(sz) < d.length(zid)) {
          (*col)[z] = (*prev)[sz];
        } else {
          (*col)[z] = (*prev)[z].times_delta() + (*prev)[sz];
        }
      }
    }
    return columns_.emplace(y, std::move(col)).first->second;
  }

  const CartanDatum* datum_;
  mutable std::mutex mutex_;
  std::map<ElementId, std::shared_ptr<const Column>> columns_;
};

namespace detail {

inline RPoly make_rpoly(const CartanDatum& d, ElementId z, ElementId w, LaurentPoly rt) {
  auto delta = expand_in_delta(rt);
  const std::string where = d.type_spec() + " z=" + word_to_string(d.reduced_word(z)) +
                            " w=" + word_to_string(d.reduced_word(w));
  if (!delta) throw TheoremViolation("R~_{z,w} lies in Z[v - v^{-1}]", where + " R~=" + rt.to_string());
  if (!all_non_negative(*delta))
    throw TheoremViolation("R~_{z,w} has non-negative (v - v^{-1})-coefficients", where + " R~=" + rt.to_string());
  QPoly rq = rt.is_zero() ? QPoly{} : qpoly_from_laurent(rt, d.length(w) - d.length(z));
  return RPoly{WeylElement(d, z), WeylElement(d, w), std::move(rq), std::move(rt), std::move(*delta)};
}

}  // namespace detail

inline RPoly r_poly(RPolyTable& table, const WeylElement& z, const WeylElement& w) {
  require_same_datum(z, w);
  return detail::make_rpoly(z.datum(), z.id(), w.id(), table.r_tilde(z.id(), w.id()));
}

inline RPoly r_poly(const WeylElement& z, const WeylElement& w) {
  RPolyTable table(z.datum());
  return r_poly(table, z, w);
}

/// bar(R~) = R~, together with the q-form bar(R_{z,w,q}) = (-q)^{|z|-|w|} R_{z,w,q}.
inline bool check_bar_symmetry(const RPoly& r) {
  if (bar(r.r_tilde) != r.r_tilde) return false;
  const int e = r.w.length() - r.z.length();
  LaurentPoly rhs = r.r_q.to_laurent().shifted(-2 * e);
  if (e % 2 != 0) rhs = -rhs;
  return bar(r.r_q.to_laurent()) == rhs;
}

struct InversionMismatch {
  WeylElement z;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

struct InversionReport {
  WeylElement w;
  std::vector<InversionMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// (-q)^{|w|} T_{w^{-1}}^{-1}, computed by generator inversion in the T basis.
inline HeckeElement inversion_lhs(const WeylElement& w) {
  const int len = w.length();
  LaurentPoly scale = LaurentPoly::monomial(len % 2 == 0 ? 1 : -1, 2 * len);
  return scale * invert_t(inverse(w));
}

/// Compares every T_z-coefficient of (-q)^{|w|} T_{w^{-1}}^{-1} with (-1)^{|z|} R_{z,w,q}.
inline InversionReport verify_inversion_identity(RPolyTable& table, const WeylElement& w) {
  const CartanDatum& d = w.datum();
  const HeckeElement lhs = inversion_lhs(w);
  const auto col = table.column(w.id());
  InversionReport report{w, {}};
  for (std::size_t z = 0; z < d.order(); ++z) {
    const auto zid = static_cast<ElementId>(z);
    LaurentPoly rhs = (*col)[z].shifted(d.length(w.id()) - d.length(zid));
    if (d.length(zid) % 2 != 0) rhs = -rhs;
    LaurentPoly left = lhs.coeff(zid);
    if (left != rhs) report.mismatches.push_back(InversionMismatch{WeylElement(d, zid), left, rhs});
  }
  return report;
}

}  // namespace hecketrace
