#pragma once

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "hecketrace/qpoly.hpp"
#include "hecketrace/struct_const.hpp"

namespace hecketrace {

/// Largest group on which the literal T-basis oracle may run.
inline constexpr std::size_t kOracleMaxOrder = 1152;

/// tau(w, q) = trace of h -> T_w h on H, with tau~(w) = v^{-|w|} tau(w, q).
struct TracePoly {
  WeylElement w;
  QPoly tau_q;
  LaurentPoly tau_tilde;
  /// tau~(w) = sum_k delta_coeffs[k] (v - v^{-1})^k; every entry is >= 0.
  std::vector<Integer> delta_coeffs;
};

namespace detail {

inline std::string element_label(const CartanDatum& d, ElementId w) {
  return d.type_spec() + " w=" + word_to_string(d.reduced_word(w));
}

inline TracePoly make_trace(const CartanDatum& d, ElementId w, LaurentPoly tt) {
  auto delta = expand_in_delta(tt);
  if (!delta) throw TheoremViolation("tau~(w) lies in Z[v - v^{-1}]", element_label(d, w) + " tau~=" + tt.to_string());
  if (!all_non_negative(*delta))
    throw TheoremViolation("tau~(w) has non-negative (v - v^{-1})-coefficients",
                           element_label(d, w) + " tau~=" + tt.to_string());
  QPoly tq = qpoly_from_laurent(tt, d.length(w));
  return TracePoly{WeylElement(d, w), std::move(tq), std::move(tt), std::move(*delta)};
}

/// Adds the diagonal sums for every y, driven by one fixed z: T~_y T~_z is built from T~_{y'} T~_z
/// with y = s y', layer by layer in length so only two layers are alive.
inline void accumulate_diagonal_for(const CartanDatum& d, ElementId z, TildeWorkspace& ws,
                                    std::vector<LaurentPoly>& diag) {
  const std::size_t n = d.order();
  std::vector<TildeWorkspace::Sparse> vec(n);
  vec[d.identity()] = {{z, LaurentPoly(1)}};
  diag[d.identity()] += LaurentPoly(1);
  std::size_t prev_begin = 0;
  std::size_t begin = 1;
  while (begin < n) {
    std::size_t end = begin;
    const int len = d.length(static_cast<ElementId>(begin));
    while (end < n && d.length(static_cast<ElementId>(end)) == len) ++end;
    for (std::size_t y = begin; y < end; ++y) {
      const auto yid = static_cast<ElementId>(y);
      const int s = d.first_left_descent(yid);
      vec[y] = ws.left_generator(s, vec[d.left_mul(s, yid)]);
      diag[y] += sparse_coeff(vec[y], z);
    }
    for (std::size_t y = prev_begin; y < begin; ++y) TildeWorkspace::Sparse().swap(vec[y]);
    prev_begin = begin;
    begin = end;
  }
}

}  // namespace detail

/// tau~(w) as sum_z c_{w,z}^z.
inline LaurentPoly tau_tilde_value(const CartanDatum& d, ElementId w) {
  TildeWorkspace ws(d);
  LaurentPoly total;
  for (std::size_t z = 0; z < d.order(); ++z) {
    const auto zid = static_cast<ElementId>(z);
    total += sparse_coeff(ws.product(w, zid), zid);
  }
  return total;
}

inline TracePoly tau(const WeylElement& w) {
  return detail::make_trace(w.datum(), w.id(), tau_tilde_value(w.datum(), w.id()));
}

/// Every tau~(w) at once, indexed by element id. The z-loop is split over worker threads; the
/// per-thread partial sums are combined in thread order, so the result is scheduling-independent.
inline std::vector<LaurentPoly> tau_tilde_all(const CartanDatum& d, unsigned threads = 0) {
  const std::size_t n = d.order();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::vector<LaurentPoly>> partial(threads, std::vector<LaurentPoly>(n));
  auto work = [&](unsigned t) {
    TildeWorkspace ws(d);
    for (std::size_t z = t; z < n; z += threads)
      detail::accumulate_diagonal_for(d, static_cast<ElementId>(z), ws, partial[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          work(t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<LaurentPoly> out(n);
  for (unsigned t = 0; t < threads; ++t)
    for (std::size_t y = 0; y < n; ++y) out[y] += partial[t][y];
  return out;
}

/// Literal oracle: sum over z of the T_z-coefficient of T_w T_z, using plain T-basis multiplication.
inline QPoly tau_direct_oracle(const WeylElement& w, std::size_t max_order = kOracleMaxOrder) {
  const CartanDatum& d = w.datum();
  if (d.order() > max_order)
    throw BudgetExceeded("budget exceeded: trace oracle limited to |W| <= " + std::to_string(max_order));
  LaurentPoly total;
  const HeckeElement tw = t(w);
  for (std::size_t z = 0; z < d.order(); ++z) {
    const auto zid = static_cast<ElementId>(z);
    total += multiply(tw, HeckeElement::basis_element(d, zid)).coeff(zid);
  }
  return qpoly_from_laurent(total, 0);
}

/// Memoised traces for one datum. Thread-safe; values do not depend on call order.
class TraceTable {
 public:
  explicit TraceTable(const CartanDatum& datum) : datum_(&datum) {}

  const CartanDatum& datum() const { return *datum_; }

  const TracePoly& get(ElementId w) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    TracePoly value = detail::make_trace(*datum_, w, tau_tilde_value(*datum_, w));
    std::lock_guard<std::mutex> lock(mutex_);
    return cache_.emplace(w, std::move(value)).first->second;
  }

  /// Fills the table for the whole group with the layered sweep.
  void fill_all(unsigned threads = 0) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (cache_.size() == datum_->order()) return;
    }
    std::vector<LaurentPoly> all = tau_tilde_all(*datum_, threads);
    std::lock_guard<std::mutex> lock(mutex_);
    for (std::size_t w = 0; w < all.size(); ++w) {
      const auto wid = static_cast<ElementId>(w);
      if (cache_.count(wid) == 0) cache_.emplace(wid, detail::make_trace(*datum_, wid, std::move(all[w])));
    }
  }

 private:
  const CartanDatum* datum_;
  std::mutex mutex_;
  std::map<ElementId, TracePoly> cache_;
};

/// bar(tau~) = tau~, together with the q-form bar(tau(w,q)) = (-q)^{-|w|} tau(w,q).
inline bool check_bar_symmetry(const TracePoly& t) {
  if (bar(t.tau_tilde) != t.tau_tilde) return false;
  const int len = t.w.length();
  LaurentPoly rhs = t.tau_q.to_laurent().shifted(-2 * len);
  if (len % 2 != 0) rhs = -rhs;
  return bar(t.tau_q.to_laurent()) == rhs;
}

struct EllipticMonicRow {
  std::size_t class_index;
  WeylElement w;
  QPoly tau_q;
  /// deg tau(w, q) = |w| with leading coefficient 1.
  bool monic_of_length_degree;
};

struct ClassConstancy {
  std::size_t class_index;
  bool is_elliptic;
  /// tau agrees on all minimal-length members of the class.
  bool constant;
};

struct EllipticMonicReport {
  std::vector<EllipticMonicRow> rows;
  std::vector<ClassConstancy> constancy;

  bool all_monic() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.monic_of_length_degree; });
  }
  bool elliptic_constant() const {
    return std::all_of(constancy.begin(), constancy.end(),
                       [](const auto& c) { return !c.is_elliptic || c.constant; });
  }
};

/// Monic-degree check on every minimal-length member of every elliptic class. Constancy of tau
/// over minimal-length members is recorded for all classes; for non-elliptic classes it is informational.
inline EllipticMonicReport elliptic_monic_report(TraceTable& table, bool include_non_elliptic = true) {
  const CartanDatum& d = table.datum();
  EllipticMonicReport report;
  for (std::size_t k = 0; k < d.classes().size(); ++k) {
    const ConjClass& c = d.classes()[k];
    if (!c.is_elliptic && !include_non_elliptic) continue;
    std::optional<QPoly> first;
    bool constant = true;
    for (ElementId w : c.minimal_elements) {
      const TracePoly& tp = table.get(w);
      if (!first) first = tp.tau_q;
      else if (*first != tp.tau_q) constant = false;
      if (c.is_elliptic)
        report.rows.push_back(EllipticMonicRow{k, WeylElement(d, w), tp.tau_q,
                                               tp.tau_q.degree() == d.length(w) && tp.tau_q.is_monic()});
    }
    report.constancy.push_back(ClassConstancy{k, c.is_elliptic, constant});
  }
  return report;
}

}  // namespace hecketrace
