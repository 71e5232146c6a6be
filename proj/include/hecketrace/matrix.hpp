#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hecketrace/errors.hpp"

namespace hecketrace {

/// Small dense square matrix over an arbitrary ring. The ring need not have a default
/// zero (quadratic extensions carry their parameter), so zero/one are passed explicitly.
template <typename T>
class Matrix {
 public:
  Matrix(std::size_t n, const T& fill) : n_(n), data_(n * n, fill) {}

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix out(n, zero);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
    return out;
  }

  std::size_t dim() const { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw InvalidArgument("matrix dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) {
        T acc = a(i, 0) * b(0, j);
        for (std::size_t k = 1; k < a.n_; ++k) acc = acc + a(i, k) * b(k, j);
        out(i, j) = std::move(acc);
      }
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }
  /// Left scalar multiplication.
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x = s * x;
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  T trace() const {
    T acc = data_[0];
    for (std::size_t i = 1; i < n_; ++i) acc = acc + (*this)(i, i);
    return acc;
  }

  template <typename F>
  auto map(F&& f) const {
    using U = decltype(f(data_[0]));
    Matrix<U> out(n_, f(data_[0]));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t n_;
  std::vector<T> data_;
};

}  // namespace hecketrace
