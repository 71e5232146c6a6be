#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecketrace/context.hpp"
#include "hecketrace/qrational.hpp"

namespace hecketrace {

struct CountEntry {
  std::string id;
  QRational symbolic;
  /// Present in numeric mode.
  std::optional<Rational> numeric;
  /// The counting formula this entry realises.
  std::string anchor;
  /// Emitted only for w elliptic of minimal length in its class.
  bool conditional = false;
};

struct OmittedEntry {
  std::string id;
  std::string reason;
};

struct CountReport {
  std::string type_spec;
  Word w;
  std::optional<Integer> q;
  std::vector<CountEntry> entries;
  std::vector<OmittedEntry> omitted;
  std::vector<std::string> warnings;

  const CountEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

/// tau(w,q) (q-1)^{-r} and R_{1,w,q} (q-1)^{-r} for w elliptic of minimal length.
struct EllipticQuotients {
  WeylElement w;
  QPoly underline_tau;
  QPoly underline_r1;
};

inline bool is_prime_power(const Integer& n) {
  if (n < 2) return false;
  Integer p = 2;
  Integer m = n;
  while (p * p <= m && !divides(p, m)) ++p;
  if (!divides(p, m)) return true;  // m itself is prime
  while (divides(p, m)) m /= p;
  return m == 1;
}

inline QPoly group_order_poly(const CartanDatum& d) {
  QPoly out = QPoly::monomial(1, d.nu());
  for (int deg : d.degrees()) out *= QPoly::monomial(1, deg) - QPoly(1);
  return out;
}

inline QPoly r1_poly(HeckeContext& ctx, ElementId w) {
  const CartanDatum& d = ctx.datum();
  return r_poly(ctx.rpolys(), WeylElement(d, d.identity()), WeylElement(d, w)).r_q;
}

inline EllipticQuotients elliptic_quotients(HeckeContext& ctx, ElementId w) {
  const CartanDatum& d = ctx.datum();
  const std::string where = d.type_spec() + " w=" + word_to_string(d.reduced_word(w));
  if (!d.is_elliptic_minimal(w)) throw InvalidArgument("w not elliptic-minimal: " + where);
  const QPoly qm1 = QPoly::q_minus_one_power(d.rank());
  const QPoly tau_q = ctx.traces().get(w).tau_q;
  const QPoly r1 = r1_poly(ctx, w);
  auto ut = tau_q.divide_exact(qm1);
  if (!ut) throw TheoremViolation("(q-1)^r divides tau(w,q)", where + " tau=" + tau_q.to_string());
  auto ur = r1.divide_exact(qm1);
  if (!ur) throw TheoremViolation("(q-1)^r divides R_{1,w,q}", where + " R=" + r1.to_string());
  return EllipticQuotients{WeylElement(d, w), std::move(*ut), std::move(*ur)};
}

struct PalindromyCheck {
  bool tau_palindromic;
  bool r1_palindromic;
  /// |w| = r mod 2.
  bool parity;
  bool all() const { return tau_palindromic && r1_palindromic && parity; }
};

/// u(q^{-1}) q^{|w|-r} = u(q) for both quotients.
inline PalindromyCheck check_palindromy(const EllipticQuotients& eq) {
  const int e = eq.w.length() - eq.w.datum().rank();
  auto palindromic = [e](const QPoly& u) { return e >= 0 && u.degree() <= e && u.reversed(e) == u; };
  return PalindromyCheck{palindromic(eq.underline_tau), palindromic(eq.underline_r1), e % 2 == 0};
}

/// Every count formula for (datum, w) at a numeric q >= 2, or symbolically when q is empty.
inline CountReport count_report(HeckeContext& ctx, ElementId w, std::optional<Integer> q, bool include_rss = true) {
  const CartanDatum& d = ctx.datum();
  if (q && *q < 2) throw InvalidArgument("q must be an integer >= 2");
  CountReport rep{d.type_spec(), d.reduced_word(w), q, {}, {}, {}};
  if (q && !is_prime_power(*q))
    rep.warnings.push_back("q=" + q->get_str() + " is not a prime power; values are formula evaluations only");

  const int r = d.rank();
  const QPoly qm1r = QPoly::q_minus_one_power(r);
  const QPoly qnu = QPoly::monomial(1, d.nu());
  const QPoly& flag = d.poincare();
  const QPoly group = group_order_poly(d);
  const QPoly tau_q = ctx.traces().get(w).tau_q;
  const QPoly r1 = r1_poly(ctx, w);
  const bool elliptic_minimal = d.is_elliptic_minimal(w);

  auto add = [&](std::string id, QRational value, std::string anchor, bool conditional) {
    CountEntry e{std::move(id), std::move(value), std::nullopt, std::move(anchor), conditional};
    if (q) e.numeric = e.symbolic.evaluate_at(Rational(*q));
    rep.entries.push_back(std::move(e));
  };
  auto omit = [&](std::string id, std::string reason) { rep.omitted.push_back({std::move(id), std::move(reason)}); };

  add("flag_count", flag, "#B^F = W(q)", false);
  add("group_order", group, "#G^F = q^nu prod_i (q^{d_i} - 1)", false);
  add("quot_X", tau_q, "#((B+)^F \\ X_w)(F_q) = tau(w,q)", false);
  add("Y_gw", tau_q, "#Y_{g,w}(F_q) = tau(w,q), g regular semisimple in (B+)^F", false);
  add("tfB_w", group * tau_q, "#(tfB_w)^F = #G^F tau(w,q)", false);
  add("tfB_w_delta", qnu * flag * tau_q, "#(tfB_w^delta)^F = q^nu #B^F tau(w,q)", false);
  add("fB_w_1", flag * qnu * r1, "#(fB_w^(1))^F = #B^F q^nu R_{1,w,q}", false);

  const std::string not_em = "w is not elliptic of minimal length in its conjugacy class";
  if (elliptic_minimal) {
    add("G_quot_fB", QPoly::monomial(1, d.length(w)), "#(G \\ fB_w)^F = q^|w|", true);
    add("G_quot_tfB", tau_q, "#(G \\ tfB_w)^F = tau(w,q)", true);
    add("G_quot_tfB_delta", QRational(tau_q, qm1r), "#(G \\ tfB_w^delta)^F = tau(w,q) (q-1)^-r", true);
    add("G_quot_fB_1", QRational(r1, qm1r), "#(G \\ fB_w^(1))^F = R_{1,w,q} (q-1)^-r", true);
  } else {
    for (const char* id : {"G_quot_fB", "G_quot_tfB", "G_quot_tfB_delta", "G_quot_fB_1"}) omit(id, not_em);
  }

  if (include_rss) {
    if (!ctx.has_characters()) {
      omit("fB_w_delta_rss", "twisted traces tau_y need character tables, available in rank <= 2 only");
      omit("G_quot_fB_delta_rss", "twisted traces tau_y need character tables, available in rank <= 2 only");
    } else {
      const CharacterTable& chars = ctx.characters();
      for (const ConjClass& c : d.classes()) {
        const ElementId y = c.minimal_elements.front();
        const std::string tag = "[" + word_to_string(d.reduced_word(y)) + "]";
        const QRational per_torus(tau_y(chars, w, y), c.char_poly);
        add("fB_w_delta_rss" + tag, QRational(group) * per_torus,
            "#(fB_w^(delta))^F = #G^F det(q-y)^-1 tau_y(w,q), delta regular semisimple of type y", false);
        if (elliptic_minimal)
          add("G_quot_fB_delta_rss" + tag, per_torus, "#(G \\ fB_w^(delta))^F = det(q-y)^-1 tau_y(w,q)", true);
        else
          omit("G_quot_fB_delta_rss" + tag, not_em);
      }
    }
  }
  return rep;
}

struct ConsistencyCheck {
  std::string name;
  bool holds;
};

/// Relations between independently assembled entries of a symbolic or numeric report.
inline std::vector<ConsistencyCheck> check_count_consistency(HeckeContext& ctx, const CountReport& rep) {
  const CartanDatum& d = ctx.datum();
  const ElementId w = d.from_word(rep.w);
  std::vector<ConsistencyCheck> out;
  auto get = [&](const std::string& id) -> const QRational& {
    const CountEntry* e = rep.find(id);
    if (e == nullptr) throw Error("internal error: missing count entry " + id);
    return e->symbolic;
  };
  const QRational qm1r(QPoly::q_minus_one_power(d.rank()));
  out.push_back({"tfB_w = (q-1)^r tfB_w_delta", get("tfB_w") == qm1r * get("tfB_w_delta")});
  out.push_back({"tfB_w = group_order tau", get("tfB_w") == get("group_order") * get("Y_gw")});
  out.push_back({"fB_w_1 = flag_count q^nu R_{1,w}",
                 get("fB_w_1") == get("flag_count") * QRational(QPoly::monomial(1, d.nu()) * r1_poly(ctx, w))});
  if (d.is_elliptic_minimal(w)) {
    const EllipticQuotients eq = elliptic_quotients(ctx, w);
    out.push_back({"G_quot_tfB = group-quotient of tfB_w", get("tfB_w") == get("group_order") * get("G_quot_tfB")});
    out.push_back({"G_quot_tfB_delta = underline tau", get("G_quot_tfB_delta") == QRational(eq.underline_tau)});
    out.push_back({"G_quot_fB_1 = underline R_1", get("G_quot_fB_1") == QRational(eq.underline_r1)});
    if (const CountEntry* e = rep.find("G_quot_fB_delta_rss[e]"))
      out.push_back({"G_quot_fB_delta_rss[e] = underline tau", e->symbolic == QRational(eq.underline_tau)});
    if (rep.q) {
      const Rational qv(*rep.q);
      out.push_back({"G_quot_fB_1 at q = underline R_1 at q",
                     *rep.find("G_quot_fB_1")->numeric == Rational(eq.underline_r1.evaluate(qv))});
    }
  }
  if (rep.q) {
    bool integral = true;
    for (const auto& e : rep.entries)
      if (!e.conditional && (e.numeric->get_den() != 1 || *e.numeric < 0)) integral = false;
    out.push_back({"unconditional entries are non-negative integers", integral});
    bool conditional_integral = true;
    for (const auto& e : rep.entries)
      if (e.conditional && (e.numeric->get_den() != 1 || *e.numeric < 0)) conditional_integral = false;
    out.push_back({"conditional entries are non-negative integers", conditional_integral});
  }
  return out;
}

}  // namespace hecketrace
