#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "conzeta/error.hpp"
#include "conzeta/numeric.hpp"

namespace conzeta {

/// Dense square matrix, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n, const T& fill = T(0)) : n_(n), a_(n * n, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw InvalidInput("matrix rows must form a square");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<T>& data() const noexcept { return a_; }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  T trace() const {
    T s(0);
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  template <class U, class F>
  Matrix<U> map(F f) const {
    Matrix<U> m(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  /// Submatrix on the given row and column index lists.
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    if (rows.size() != cols.size()) throw InvalidInput("submatrix must be square");
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    const auto n = a.n_;
    Matrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    check_same(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw InvalidInput("matrix size mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntegerMatrix = Matrix<BigInt>;
using RealMatrix = Matrix<double>;

inline RealMatrix to_real(const IntegerMatrix& m) {
  return m.map<double>([](const BigInt& v) { return v.convert_to<double>(); });
}

/// Matrix dump format: first line n, then n rows of space separated entries.
template <class T>
void write_matrix(std::ostream& out, const Matrix<T>& m) {
  out << m.size() << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

}  // namespace conzeta
