#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "hecketrace/hecke.hpp"

namespace hecketrace {

inline constexpr int kMaxExprPower = 64;

namespace detail {

/// Recursive-descent parser for
///   expr := term (('+'|'-') term)*     term := ['-'] factor ('*' factor)*
///   factor := atom ('^' digits)?       atom := 'T[' word ']' | 'Tt[' word ']' | 'q' | 'v' | digits | '(' expr ')'
/// Words need not be reduced: T[w] is the product of the generator images in word order.
class HeckeExprParser {
 public:
  HeckeExprParser(const CartanDatum& d, std::string_view text) : d_(d), text_(text) {}

  HeckeElement parse() {
    HeckeElement out = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  HeckeElement expr() {
    HeckeElement acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  HeckeElement term() {
    const bool negate = accept('-');
    HeckeElement acc = factor();
    while (accept('*')) acc = multiply(acc, factor());
    return negate ? -acc : acc;
  }

  HeckeElement factor() {
    HeckeElement base = atom();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t start = pos_;
    const std::string digits = read_digits();
    if (digits.empty()) fail("expected a non-negative exponent");
    if (digits.size() > 3 || std::stoi(digits) > kMaxExprPower) {
      pos_ = start;
      fail("exponent above " + std::to_string(kMaxExprPower));
    }
    HeckeElement out = HeckeElement::scalar(d_, LaurentPoly(1));
    for (int k = std::stoi(digits); k > 0; --k) out = multiply(out, base);
    return out;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) out += text_[pos_++];
    return out;
  }

  HeckeElement atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      HeckeElement inner = expr();
      expect(')');
      return inner;
    }
    if (c == 'q' || c == 'v') {
      ++pos_;
      return HeckeElement::scalar(d_, LaurentPoly::monomial(1, c == 'q' ? 2 : 1));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      const std::string digits = read_digits();
      return HeckeElement::scalar(d_, LaurentPoly(Integer(digits)));
    }
    if (c == 'T') {
      ++pos_;
      bool tilde = false;
      if (pos_ < text_.size() && text_[pos_] == 't') {
        tilde = true;
        ++pos_;
      }
      if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '[' after T");
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      const std::size_t close = text_.find(']', start);
      if (close == std::string_view::npos) {
        pos_ = text_.size();
        fail("missing ']'");
      }
      std::size_t end = close;
      while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1])) != 0) --end;
      Word word;
      try {
        word = parse_word(text_.substr(start, end - start));
      } catch (const ParseError& e) {
        pos_ = start + e.position();
        fail("malformed word");
      }
      for (int s : word) {
        if (s < 1 || s > d_.rank()) {
          pos_ = start;
          fail("generator index " + std::to_string(s) + " out of range 1.." + std::to_string(d_.rank()));
        }
      }
      pos_ = close + 1;
      HeckeElement::Terms acc{{d_.identity(), LaurentPoly(1)}};
      for (auto it = word.rbegin(); it != word.rend(); ++it) acc = detail::left_generator_T(d_, *it, acc);
      HeckeElement out(d_, Basis::T, std::move(acc));
      if (tilde) out = LaurentPoly::monomial(1, -static_cast<int>(word.size())) * out;
      return out;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const CartanDatum& d_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Evaluates a Hecke expression; the result is in the T basis.
inline HeckeElement parse_hecke_expr(const CartanDatum& d, std::string_view text) {
  return detail::HeckeExprParser(d, text).parse();
}

}  // namespace hecketrace
