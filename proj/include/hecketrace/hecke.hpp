#pragma once

#include <map>
#include <string>
#include <utility>

#include "hecketrace/laurent_poly.hpp"
#include "hecketrace/weyl.hpp"

namespace hecketrace {

/// T: the standard basis T_w. Tilde: the normalised basis T~_w = v^{-|w|} T_w.
enum class Basis { T, Tilde };

/// Element of the Iwahori-Hecke algebra over Z[v, v^{-1}] (q = v^2), as a finitely
/// supported map from group elements to coefficients in one of the two bases.
class HeckeElement {
 public:
  using Terms = std::map<ElementId, LaurentPoly>;

  explicit HeckeElement(const CartanDatum& datum, Basis basis = Basis::T) : datum_(&datum), basis_(basis) {}
  HeckeElement(const CartanDatum& datum, Basis basis, Terms terms)
      : datum_(&datum), basis_(basis), terms_(std::move(terms)) {
    prune();
  }

  static HeckeElement basis_element(const CartanDatum& datum, ElementId w, Basis basis = Basis::T) {
    HeckeElement h(datum, basis);
    h.terms_.emplace(w, LaurentPoly(1));
    return h;
  }

  static HeckeElement scalar(const CartanDatum& datum, const LaurentPoly& c, Basis basis = Basis::T) {
    HeckeElement h(datum, basis);
    if (!c.is_zero()) h.terms_.emplace(datum.identity(), c);
    return h;
  }

  const CartanDatum& datum() const { return *datum_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly coeff(ElementId w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LaurentPoly{} : it->second;
  }

  void add(ElementId w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto& slot = terms_[w];
    slot += c;
    if (slot.is_zero()) terms_.erase(w);
  }

  /// Same element expressed in the other basis: T_w = v^{|w|} T~_w.
  HeckeElement in_basis(Basis target) const {
    if (target == basis_) return *this;
    HeckeElement out(*datum_, target);
    const int sign = target == Basis::Tilde ? 1 : -1;
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, c.shifted(sign * datum_->length(w)));
    return out;
  }
  HeckeElement to_T() const { return in_basis(Basis::T); }
  HeckeElement to_tilde() const { return in_basis(Basis::Tilde); }

  HeckeElement& operator+=(const HeckeElement& o) {
    require_same_datum(*datum_, *o.datum_);
    const HeckeElement other = o.in_basis(basis_);
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    require_same_datum(*datum_, *o.datum_);
    const HeckeElement other = o.in_basis(basis_);
    for (const auto& [w, c] : other.terms_) add(w, -c);
    return *this;
  }
  HeckeElement operator-() const {
    HeckeElement out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const LaurentPoly& c, HeckeElement h) {
    if (c.is_zero()) return HeckeElement(*h.datum_, h.basis_);
    for (auto& [w, x] : h.terms_) x *= c;
    return h;
  }

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.datum_ == b.datum_ && a.terms_ == b.in_basis(a.basis_).terms_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    const std::string name = basis_ == Basis::T ? "T" : "Tt";
    for (const auto& [w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + q_or_v_string(c) + ")*" + name + "[" + word_to_string(datum_->reduced_word(w)) + "]";
    }
    return out;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  const CartanDatum* datum_;
  Basis basis_;
  Terms terms_;
};

namespace detail {

/// T_s * h with h in the T basis: T_s T_x = T_{sx} if sx > x, else q T_{sx} + (q - 1) T_x.
inline HeckeElement::Terms left_generator_T(const CartanDatum& d, int s, const HeckeElement::Terms& h) {
  HeckeElement::Terms out;
  auto add = [&](ElementId w, LaurentPoly c) {
    auto& slot = out[w];
    slot += c;
  };
  for (const auto& [x, c] : h) {
    const ElementId sx = d.left_mul(s, x);
    if (d.length(sx) > d.length(x)) {
      add(sx, c);
    } else {
      LaurentPoly qc = c.shifted(2);
      add(sx, qc);
      add(x, qc - c);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// T_s^{-1} * h with h in the T basis, using T_s^{-1} = q^{-1} T_s - (1 - q^{-1}).
inline HeckeElement::Terms left_generator_inverse_T(const CartanDatum& d, int s, const HeckeElement::Terms& h) {
  HeckeElement::Terms out = left_generator_T(d, s, h);
  for (auto& [w, c] : out) c = c.shifted(-2);
  for (const auto& [x, c] : h) {
    auto& slot = out[x];
    slot += c.shifted(-2) - c;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace detail

inline HeckeElement t(const WeylElement& w) { return HeckeElement::basis_element(w.datum(), w.id(), Basis::T); }

inline HeckeElement t_tilde(const WeylElement& w) {
  return HeckeElement::basis_element(w.datum(), w.id(), Basis::Tilde);
}

/// Product in H. The result is expressed in the basis of the left operand.
inline HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) {
  require_same_datum(a.datum(), b.datum());
  const CartanDatum& d = a.datum();
  const HeckeElement::Terms rhs = b.to_T().terms();
  HeckeElement out(d, Basis::T);
  const HeckeElement lhs = a.to_T();
  for (const auto& [x, c] : lhs.terms()) {
    HeckeElement::Terms acc = rhs;
    const Word& word = d.reduced_word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = detail::left_generator_T(d, *it, acc);
    for (const auto& [y, e] : acc) out.add(y, c * e);
  }
  return out.in_basis(a.basis());
}

inline HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) { return multiply(a, b); }

/// T_w^{-1} for a reduced word of w, as the product T_{s_k}^{-1} ... T_{s_1}^{-1}.
inline HeckeElement invert_word(const CartanDatum& d, const Word& reduced) {
  if (static_cast<std::size_t>(d.length(d.from_word(reduced))) != reduced.size())
    throw InvalidArgument("word " + word_to_string(reduced) + " is not reduced");
  HeckeElement::Terms acc{{d.identity(), LaurentPoly(1)}};
  for (int s : reduced) acc = detail::left_generator_inverse_T(d, s, acc);
  return HeckeElement(d, Basis::T, std::move(acc));
}

/// T_w^{-1} in the T basis (coefficients in Z[v^2, v^{-2}]).
inline HeckeElement invert_t(const WeylElement& w) { return invert_word(w.datum(), w.reduced_word()); }

}  // namespace hecketrace
