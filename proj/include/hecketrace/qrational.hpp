#pragma once

#include <optional>
#include <string>
#include <utility>

#include "hecketrace/errors.hpp"
#include "hecketrace/qpoly.hpp"

namespace hecketrace {

/// Rational function num/den in q with num, den in Z[q], gcd(num, den) = 1 in Z[q] and a
/// positive leading denominator coefficient. Equal values therefore have equal fields.
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(const QPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const Integer& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial when the reduced denominator is 1.
  std::optional<QPoly> is_polynomial() const {
    if (den_ == QPoly(1)) return num_;
    return std::nullopt;
  }

  Rational evaluate_at(const Rational& x) const {
    Rational d = den_.evaluate(x);
    if (d == 0) throw DomainError("rational function has a pole at q = " + x.get_str());
    Rational out = num_.evaluate(x) / d;
    return out;
  }

  QRational operator-() const { return QRational(-num_, den_, Reduced{}); }

  friend QRational operator+(const QRational& a, const QRational& b) {
    if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
    return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }
  friend QRational operator*(const QRational& a, const QRational& b) {
    return QRational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend QRational operator/(const QRational& a, const QRational& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return QRational(a.num_ * b.den_, a.den_ * b.num_);
  }
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }

  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

  std::string to_string() const {
    if (den_ == QPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  struct Reduced {};
  QRational(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = QPoly(1);
      return;
    }
    QPoly g = gcd(num_, den_);
    if (g != QPoly(1)) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
    if (den_.leading() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  QPoly num_;
  QPoly den_;
};

}  // namespace hecketrace
