#pragma once

#include <string>
#include <vector>

#include "hecketrace/cartan.hpp"

namespace hecketrace {

/// Handle to an element of an enumerated Weyl group. Non-owning: the datum must outlive it.
class WeylElement {
 public:
  WeylElement(const CartanDatum& datum, ElementId id) : datum_(&datum), id_(id) {}

  const CartanDatum& datum() const { return *datum_; }
  ElementId id() const { return id_; }

  int length() const { return datum_->length(id_); }
  IntMatrix matrix() const { return datum_->matrix(id_); }
  std::vector<int> root_perm() const { return datum_->root_perm(id_); }
  const Word& reduced_word() const { return datum_->reduced_word(id_); }
  bool is_identity() const { return id_ == datum_->identity(); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.datum_ == b.datum_ && a.id_ == b.id_;
  }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

 private:
  const CartanDatum* datum_;
  ElementId id_;
};

inline void require_same_datum(const WeylElement& a, const WeylElement& b) {
  if (&a.datum() != &b.datum()) throw InvalidArgument("elements belong to different Cartan data");
}

inline void require_same_datum(const CartanDatum& a, const CartanDatum& b) {
  if (&a != &b) throw InvalidArgument("operands belong to different Cartan data");
}

/// Product of simple reflections in word order; the empty word is the identity.
inline WeylElement element_from_word(const CartanDatum& datum, const Word& word) {
  return {datum, datum.from_word(word)};
}

inline WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  require_same_datum(a, b);
  return {a.datum(), a.datum().multiply(a.id(), b.id())};
}

inline WeylElement operator*(const WeylElement& a, const WeylElement& b) { return multiply(a, b); }

inline WeylElement inverse(const WeylElement& a) { return {a.datum(), a.datum().inverse(a.id())}; }

inline int length(const WeylElement& a) { return a.length(); }

inline std::vector<int> left_descents(const WeylElement& a) {
  std::vector<int> out;
  for (int s = 1; s <= a.datum().rank(); ++s)
    if (a.datum().is_left_descent(s, a.id())) out.push_back(s);
  return out;
}

/// Lexicographically smallest reduced expression.
inline Word reduced_word(const WeylElement& a) { return a.reduced_word(); }

/// Reduced expression built by always peeling the largest left descent. Differs from
/// reduced_word whenever a has two or more left descents somewhere along the way.
inline Word reduced_word_largest_first(const WeylElement& a) {
  const CartanDatum& d = a.datum();
  Word out;
  ElementId w = a.id();
  while (w != d.identity()) {
    int s = d.rank();
    while (!d.is_left_descent(s, w)) --s;
    out.push_back(s);
    w = d.left_mul(s, w);
  }
  return out;
}

inline std::vector<WeylElement> enumerate(const CartanDatum& datum) {
  std::vector<WeylElement> out;
  out.reserve(datum.order());
  for (std::size_t k = 0; k < datum.order(); ++k) out.emplace_back(datum, static_cast<ElementId>(k));
  return out;
}

inline const std::vector<ConjClass>& conjugacy_classes(const CartanDatum& datum) { return datum.classes(); }

/// det(q I - M_y) on the reflection representation.
inline QPoly reflection_char_poly(const WeylElement& y) { return y.datum().char_poly(y.id()); }

inline const QPoly& poincare_polynomial(const CartanDatum& datum) { return datum.poincare(); }

inline const std::vector<int>& degrees(const CartanDatum& datum) { return datum.degrees(); }

inline std::string word_to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  bool wide = false;
  for (int s : w) wide = wide || s > 9;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

/// Parses "121", "1,2,1", "e" or "" into a word. Digit strings are one generator per digit.
inline Word parse_word(std::string_view text) {
  Word out;
  if (text.empty() || text == "e") return out;
  const bool comma_form = text.find(',') != std::string_view::npos;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[pos])) == 0)
      throw ParseError(std::string("unexpected character '") + text[pos] + "' in word", pos);
    if (comma_form) {
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])) != 0) ++end;
      if (end - pos > 6) throw ParseError("generator index too large", pos);
      out.push_back(std::stoi(std::string(text.substr(pos, end - pos))));
      pos = end;
      if (pos < text.size()) {
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
        if (pos == text.size()) throw ParseError("trailing ','", pos);
      }
    } else {
      out.push_back(text[pos] - '0');
      ++pos;
    }
  }
  return out;
}

}  // namespace hecketrace
