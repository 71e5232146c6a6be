#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hecketrace/errors.hpp"
#include "hecketrace/integer.hpp"

namespace hecketrace {

/// Integer Laurent polynomial in v, stored as a sparse list of (exponent, coefficient)
/// terms sorted by exponent. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(const Integer& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.emplace_back(0, c);
  }
  LaurentPoly(long c) : LaurentPoly(Integer(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}   // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Integer& c, int exp) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(exp, c);
    return p;
  }

  static LaurentPoly v() { return monomial(1, 1); }

  /// v - v^{-1}
  static LaurentPoly delta() {
    LaurentPoly p;
    p.terms_.emplace_back(-1, Integer(-1));
    p.terms_.emplace_back(1, Integer(1));
    return p;
  }

  /// Builds from arbitrary terms: sorts, merges equal exponents, drops zeros.
  static LaurentPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LaurentPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        p.terms_.back().second += t.second;
        if (p.terms_.back().second == 0) p.terms_.pop_back();
      } else if (t.second != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  /// Dense coefficients ascending from min_exp.
  static LaurentPoly from_dense(int min_exp, const std::vector<Integer>& coeffs) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) p.terms_.emplace_back(min_exp + static_cast<int>(i), coeffs[i]);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

  Integer coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exp) ? it->second : Integer(0);
  }

  /// Dense coefficient list from min_exp() to max_exp().
  std::vector<Integer> dense() const {
    if (terms_.empty()) return {};
    std::vector<Integer> out(static_cast<std::size_t>(max_exp() - min_exp() + 1));
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - min_exp())] = c;
    return out;
  }

  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.first += k;
    return p;
  }

  /// Multiplication by (v - v^{-1}).
  LaurentPoly times_delta() const { return shifted(1) - shifted(-1); }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) { return merge(o, 1); }
  LaurentPoly& operator-=(const LaurentPoly& o) { return merge(o, -1); }

  LaurentPoly& operator*=(const Integer& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& t : terms_) t.second *= c;
    }
    return *this;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  friend LaurentPoly operator*(const Integer& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, long c) { return a *= Integer(c); }
  friend LaurentPoly operator*(long c, LaurentPoly a) { return a *= Integer(c); }
  friend LaurentPoly operator*(LaurentPoly a, int c) { return a *= Integer(c); }
  friend LaurentPoly operator*(int c, LaurentPoly a) { return a *= Integer(c); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.size() == 1) return a.shifted(b.terms_[0].first) * b.terms_[0].second;
    if (a.size() == 1) return b.shifted(a.terms_[0].first) * a.terms_[0].second;
    std::vector<Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.emplace_back(ea + eb, ca * cb);
    return from_terms(std::move(out));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned n) const {
    LaurentPoly out(1), base = *this;
    while (n != 0) {
      if (n & 1U) out *= base;
      n >>= 1U;
      if (n != 0) base *= base;
    }
    return out;
  }

  /// Value at v = x (x must be non-zero when negative exponents occur).
  Rational evaluate(const Rational& x) const {
    Rational out = 0;
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      if (e >= 0) {
        Rational px;
        mpz_pow_ui(px.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(px.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
        term *= px;
      } else {
        if (x == 0) throw DomainError("negative power of zero in Laurent evaluation");
        Rational px;
        mpz_pow_ui(px.get_num_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(-e));
        mpz_pow_ui(px.get_den_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(-e));
        px.canonicalize();
        term *= px;
      }
      out += term;
    }
    return out;
  }

  /// Sum of coefficients (value at v = 1).
  Integer value_at_one() const {
    Integer s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
  }

  std::string to_string(const std::string& var = "v") const;

 private:
  LaurentPoly& merge(const LaurentPoly& o, int sign) {
    if (o.terms_.empty()) return *this;
    if (this == &o) {
      const LaurentPoly copy = o;
      return merge(copy, sign);
    }
    if (terms_.empty()) {
      terms_ = o.terms_;
      if (sign < 0)
        for (auto& t : terms_) t.second = -t.second;
      return *this;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
      if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
        out.push_back(std::move(*i++));
      } else if (i == terms_.end() || j->first < i->first) {
        out.emplace_back(j->first, sign > 0 ? j->second : Integer(-j->second));
        ++j;
      } else {
        Integer c = sign > 0 ? Integer(i->second + j->second) : Integer(i->second - j->second);
        if (c != 0) out.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
    return *this;
  }

  std::vector<Term> terms_;
};

namespace detail {

inline std::string monomial_string(const Integer& c, int e, const std::string& var, bool first) {
  std::string out;
  Integer a = c;
  if (first) {
    if (a < 0) {
      out += "-";
      a = -a;
    }
  } else {
    out += a < 0 ? " - " : " + ";
    if (a < 0) a = -a;
  }
  if (e == 0) return out + a.get_str();
  if (a != 1) out += a.get_str() + "*";
  out += var;
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

}  // namespace detail

inline std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    out += detail::monomial_string(it->second, it->first, var, first);
    first = false;
  }
  return out;
}

/// Bar involution: v^n -> (-1)^n v^{-n}. Ring automorphism of Z[v, v^{-1}] with q -> q^{-1}.
/// Written in q = v^2 when every exponent is even, otherwise in v.
inline std::string q_or_v_string(const LaurentPoly& f) {
  std::vector<LaurentPoly::Term> halved;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0) return f.to_string();
    halved.emplace_back(e / 2, c);
  }
  return LaurentPoly::from_terms(std::move(halved)).to_string("q");
}

inline LaurentPoly bar(const LaurentPoly& f) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) out.emplace_back(-e, (e % 2 == 0) ? c : Integer(-c));
  return LaurentPoly::from_terms(std::move(out));
}

/// (v - v^{-1})^n
inline LaurentPoly delta_power(int n) {
  std::vector<LaurentPoly::Term> out;
  for (int k = 0; k <= n; ++k) {
    Integer c = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (k % 2 != 0) c = -c;
    out.emplace_back(n - 2 * k, c);
  }
  return LaurentPoly::from_terms(std::move(out));
}

/// Coefficients (c_0, ..., c_n) with f = sum c_k (v - v^{-1})^k, found by repeatedly
/// cancelling the leading term. Empty optional when no such integer expansion exists.
inline std::optional<std::vector<Integer>> expand_in_delta(const LaurentPoly& f) {
  if (f.is_zero()) return std::vector<Integer>{};
  if (f.max_exp() < 0) return std::nullopt;
  std::vector<Integer> coeffs(static_cast<std::size_t>(f.max_exp() + 1));
  LaurentPoly rest = f;
  while (!rest.is_zero()) {
    const int n = rest.max_exp();
    if (n < 0) return std::nullopt;
    Integer c = rest.terms().back().second;
    coeffs[static_cast<std::size_t>(n)] = c;
    rest -= delta_power(n) * c;
  }
  return coeffs;
}

/// Inverse of expand_in_delta.
inline LaurentPoly from_delta_coeffs(const std::vector<Integer>& coeffs) {
  LaurentPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) out += delta_power(static_cast<int>(k)) * coeffs[k];
  return out;
}

inline bool all_non_negative(const std::vector<Integer>& coeffs) {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c >= 0; });
}

}  // namespace hecketrace
