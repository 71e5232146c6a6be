#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecketrace/errors.hpp"
#include "hecketrace/integer.hpp"
#include "hecketrace/laurent_poly.hpp"

namespace hecketrace {

/// Integer polynomial in q, dense ascending coefficients without trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  QPoly(long c) : QPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  QPoly(int c) : QPoly(Integer(c)) {}   // NOLINT(google-explicit-constructor)
  explicit QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static QPoly q() { return monomial(1, 1); }

  static QPoly monomial(const Integer& c, int k) {
    if (c == 0) return {};
    std::vector<Integer> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return QPoly(std::move(v));
  }

  /// q-integer [d]_q = 1 + q + ... + q^{d-1}.
  static QPoly q_integer(int d) { return QPoly(std::vector<Integer>(static_cast<std::size_t>(d), 1)); }

  /// (q - 1)^n
  static QPoly q_minus_one_power(int n) {
    return QPoly(std::vector<Integer>{Integer(-1), Integer(1)}).pow(static_cast<unsigned>(n));
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)]
                                                             : Integer(0);
  }
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  QPoly operator-() const {
    QPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  QPoly& operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  QPoly& operator*=(const QPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return QPoly(std::move(out));
  }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  QPoly pow(unsigned n) const {
    QPoly out(1), base = *this;
    while (n != 0) {
      if (n & 1U) out *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return out;
  }

  Integer evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  /// Exact quotient in Z[q]; empty when the divisor leaves a remainder or a fractional coefficient.
  std::optional<QPoly> divide_exact(const QPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (is_zero()) return QPoly{};
    if (degree() < d.degree()) return std::nullopt;
    std::vector<Integer> rem = coeffs_;
    std::vector<Integer> quot(static_cast<std::size_t>(degree() - d.degree() + 1));
    for (int k = degree() - d.degree(); k >= 0; --k) {
      const Integer& top = rem[static_cast<std::size_t>(k + d.degree())];
      if (top == 0) continue;
      if (!divides(d.leading(), top)) return std::nullopt;
      Integer c = divexact(top, d.leading());
      for (int i = 0; i <= d.degree(); ++i)
        rem[static_cast<std::size_t>(k + i)] -= c * d.coeffs_[static_cast<std::size_t>(i)];
      quot[static_cast<std::size_t>(k)] = std::move(c);
    }
    if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) return std::nullopt;
    return QPoly(std::move(quot));
  }

  /// q^n f(q^{-1}); requires n >= degree().
  QPoly reversed(int n) const {
    if (n < degree()) throw InvalidArgument("reversal length below degree");
    std::vector<Integer> out(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(n) - i] = coeffs_[i];
    return QPoly(std::move(out));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  /// Embedding q -> v^2.
  LaurentPoly to_laurent() const {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) terms.emplace_back(2 * static_cast<int>(i), coeffs_[i]);
    return LaurentPoly::from_terms(std::move(terms));
  }

  std::string to_string(const std::string& var = "q") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const Integer& c = coeffs_[static_cast<std::size_t>(k)];
      if (c == 0) continue;
      out += detail::monomial_string(c, k, var, first);
      first = false;
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Recovers a polynomial in q = v^2 from v^shift * f. Throws DomainError when odd or
/// negative exponents remain.
inline QPoly qpoly_from_laurent(const LaurentPoly& f, int shift) {
  std::vector<Integer> out;
  for (const auto& [e0, c] : f.terms()) {
    const int e = e0 + shift;
    if (e < 0 || e % 2 != 0)
      throw DomainError("v^" + std::to_string(shift) + " * (" + f.to_string() +
                        ") is not a polynomial in q = v^2");
    const auto k = static_cast<std::size_t>(e / 2);
    if (out.size() <= k) out.resize(k + 1);
    out[k] = c;
  }
  return QPoly(std::move(out));
}

/// Polynomial with rational coefficients; used for gcds and for the quadratic extension tests.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  explicit RatPoly(const QPoly& p) {
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  RatPoly operator-() const {
    RatPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }
  RatPoly& operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RatPoly& operator-=(const RatPoly& o) { return *this += -o; }
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RatPoly(std::move(out));
  }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

  /// Euclidean division over Q.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < d.degree()) return {RatPoly{}, *this};
    std::vector<Rational> rem = coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - d.degree() + 1));
    for (int k = degree() - d.degree(); k >= 0; --k) {
      Rational c = rem[static_cast<std::size_t>(k + d.degree())] / d.leading();
      if (c == 0) continue;
      for (int i = 0; i <= d.degree(); ++i)
        rem[static_cast<std::size_t>(k + i)] -= c * d.coeffs_[static_cast<std::size_t>(i)];
      quot[static_cast<std::size_t>(k)] = c;
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
  }

  RatPoly monic() const {
    RatPoly p = *this;
    if (p.is_zero()) return p;
    const Rational lc = p.leading();
    for (auto& c : p.coeffs_) c /= lc;
    return p;
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Monic gcd over Q.
inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Primitive integer polynomial with positive leading coefficient proportional to p.
inline QPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(divexact(Integer(c.get_num() * den), c.get_den()));
  QPoly q(std::move(out));
  Integer cont = q.content();
  if (q.leading() < 0) cont = -cont;
  std::vector<Integer> reduced;
  for (const auto& c : q.coeffs()) reduced.push_back(divexact(c, cont));
  return QPoly(std::move(reduced));
}

/// gcd in Z[q], normalised to positive leading coefficient.
inline QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;
  const Integer cont = gcd(a.content(), b.content());
  QPoly prim = primitive_part(gcd(RatPoly(a), RatPoly(b)));
  return prim * QPoly(cont);
}

}  // namespace hecketrace
