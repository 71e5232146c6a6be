#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hecketrace/counts.hpp"

namespace hecketrace {

using Json = nlohmann::json;

/// int64 when it fits, otherwise the exact decimal string.
inline Json to_json(const Integer& x) {
  if (fits_int64(x)) return to_int64(x);
  return x.get_str();
}

inline Json to_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

/// Integral rationals collapse to integers; otherwise {"num","den"}.
inline Json to_json(const Rational& raw) {
  Rational x(raw);
  x.canonicalize();
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return Json{{"num", to_json(Integer(x.get_num()))}, {"den", to_json(Integer(x.get_den()))}};
}

inline Json to_json(const QPoly& p) { return Json{{"var", "q"}, {"coeffs", to_json(p.coeffs())}}; }

inline Json to_json(const LaurentPoly& f) {
  return Json{{"var", "v"}, {"min_exp", f.min_exp()}, {"coeffs", to_json(f.dense())}};
}

inline Json to_json(const QRational& r) { return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

inline Json word_json(const Word& w) {
  Json out = Json::array();
  for (int s : w) out.push_back(s);
  return out;
}

inline Json to_json(const WeylElement& w) { return Json{{"word", word_json(w.reduced_word())}}; }

inline Json to_json(const CartanDatum& d) {
  return Json{{"type", d.type_spec()},
              {"rank", d.rank()},
              {"nu", d.nu()},
              {"order", d.order()},
              {"degrees", d.degrees()}};
}

/// Terms come out in element-id order, which is (length, word).
inline Json to_json(const HeckeElement& h) {
  const CartanDatum& d = h.datum();
  Json terms = Json::array();
  for (const auto& [w, c] : h.terms())
    terms.push_back(Json{{"word", word_json(d.reduced_word(w))}, {"coeff", to_json(c)}});
  return Json{{"basis", h.basis() == Basis::T ? "T" : "Tt"}, {"terms", std::move(terms)}};
}

inline Json to_json(const TracePoly& t) {
  return Json{{"w", word_json(t.w.reduced_word())},
              {"tau", to_json(t.tau_q)},
              {"tau_tilde", to_json(t.tau_tilde)},
              {"delta_coeffs", to_json(t.delta_coeffs)}};
}

inline Json to_json(const RPoly& r) {
  return Json{{"z", word_json(r.z.reduced_word())},
              {"w", word_json(r.w.reduced_word())},
              {"r", to_json(r.r_q)},
              {"r_tilde", to_json(r.r_tilde)},
              {"delta_coeffs", to_json(r.delta_coeffs)}};
}

inline Json classes_json(const CartanDatum& d) {
  Json rows = Json::array();
  for (std::size_t k = 0; k < d.classes().size(); ++k) {
    const ConjClass& c = d.classes()[k];
    Json minimal = Json::array();
    for (ElementId y : c.minimal_elements) minimal.push_back(word_json(d.reduced_word(y)));
    rows.push_back(Json{{"index", k},
                        {"size", c.members.size()},
                        {"representative", word_json(d.reduced_word(c.minimal_elements.front()))},
                        {"min_length", c.min_length},
                        {"elliptic", c.is_elliptic},
                        {"minimal_elements", std::move(minimal)},
                        {"char_poly", to_json(c.char_poly)}});
  }
  return Json{{"type", d.type_spec()}, {"classes", std::move(rows)}};
}

/// Characters on class representatives; on every element when full is set.
inline Json to_json(const CharacterTable& t, bool full = false) {
  const CartanDatum& d = t.datum();
  std::vector<ElementId> points;
  if (full) {
    for (std::size_t w = 0; w < d.order(); ++w) points.push_back(static_cast<ElementId>(w));
  } else {
    for (const ConjClass& c : d.classes()) points.push_back(c.minimal_elements.front());
  }
  Json irreps = Json::array();
  for (std::size_t k = 0; k < t.irreps().size(); ++k) {
    Json chars = Json::object();
    for (ElementId w : points) chars[word_to_string(d.reduced_word(w))] = to_json(t.value(k, w));
    irreps.push_back(Json{{"label", t.irreps()[k].label}, {"dim", t.irreps()[k].dim}, {"char", std::move(chars)}});
  }
  return Json{{"type", d.type_spec()}, {"irreps", std::move(irreps)}};
}

inline Json to_json(const CountReport& rep) {
  Json entries = Json::object();
  for (const auto& e : rep.entries) {
    Json value;
    if (e.numeric) {
      value = to_json(*e.numeric);
    } else if (auto p = e.symbolic.is_polynomial()) {
      value = to_json(*p);
    } else {
      value = to_json(e.symbolic);
    }
    entries[e.id] = Json{{"value", std::move(value)}, {"anchor", e.anchor}, {"conditional", e.conditional}};
  }
  Json omitted = Json::object();
  for (const auto& o : rep.omitted) omitted[o.id] = o.reason;
  return Json{{"type", rep.type_spec},
              {"w", word_json(rep.w)},
              {"q", rep.q ? to_json(*rep.q) : Json("symbolic")},
              {"entries", std::move(entries)},
              {"omitted", std::move(omitted)},
              {"warnings", rep.warnings}};
}

/// RFC 4180 quoting, applied only when needed.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

}  // namespace hecketrace
