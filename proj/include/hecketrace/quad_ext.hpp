#pragma once

#include <string>
#include <utility>

#include "hecketrace/errors.hpp"

namespace hecketrace {

/// a + b*c over a commutative ring R, where c^2 = m for a fixed element m of R.
/// Elements combined in one expression must share m.
template <typename R>
class QuadExt {
 public:
  QuadExt(R a, R b, R m) : a_(std::move(a)), b_(std::move(b)), m_(std::move(m)) {}

  static QuadExt scalar(R a, R m) { return QuadExt(std::move(a), R{}, std::move(m)); }

  const R& a() const { return a_; }
  const R& b() const { return b_; }
  const R& m() const { return m_; }

  QuadExt conj() const { return QuadExt(a_, -b_, m_); }
  R norm() const { return a_ * a_ - m_ * b_ * b_; }

  friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    check(x, y);
    return QuadExt(x.a_ + y.a_, x.b_ + y.b_, x.m_);
  }
  friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    check(x, y);
    return QuadExt(x.a_ - y.a_, x.b_ - y.b_, x.m_);
  }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    check(x, y);
    return QuadExt(x.a_ * y.a_ + x.m_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.m_);
  }
  QuadExt operator-() const { return QuadExt(-a_, -b_, m_); }

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.m_ == y.m_;
  }
  friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

 private:
  static void check(const QuadExt& x, const QuadExt& y) {
    if (x.m_ != y.m_) throw InvalidArgument("quadratic extension elements with different c^2");
  }

  R a_;
  R b_;
  R m_;
};

}  // namespace hecketrace
