#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "conzeta/numeric.hpp"

namespace conzeta {

/// Univariate polynomial, coefficients in ascending degree, trailing zeros trimmed.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }
  Polynomial(std::initializer_list<T> coefficients) : c_(coefficients) { trim(); }
  /// Constant polynomial; lets Polynomial serve as a matrix entry type.
  template <std::integral I>
  explicit Polynomial(I v) : c_{T(v)} { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }

  const std::vector<T>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of x^k (zero past the degree).
  T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& v) {
    for (auto& x : c_) x *= v;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T& v) { return a *= v; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Exact division of every coefficient by an integer.
  Polynomial divided_exactly(const T& d) const {
    std::vector<T> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(divide_exact(x, d));
    return Polynomial(std::move(c));
  }

  /// Human readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const T& v = c_[i];
      if (v == T(0)) continue;
      const bool neg = v < T(0);
      const T mag = neg ? T(-v) : v;
      if (s.empty()) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      const bool unit = mag == T(1);
      if (!unit || i == 0) s += conzeta::to_string(mag);
      if (i > 0) {
        if (!unit) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;
/// Polynomial in the deformation parameter t. Coefficients that arise are
/// always integers, so the integer ring is used directly.
using TPolynomial = Polynomial<BigInt>;

/// Builds an IntPolynomial from small integers.
inline IntPolynomial int_poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (auto x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

/// Quotient and remainder of integer polynomials when the divisor is monic
/// (up to sign) in its leading coefficient.
inline std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("division by the zero polynomial");
  const BigInt lead = b.coefficients().back();
  if (lead != 1 && lead != -1) throw InvalidInput("divisor must have leading coefficient +-1");
  std::vector<BigInt> r = a.coefficients();
  const auto db = static_cast<std::size_t>(b.degree());
  if (r.size() <= db) return {IntPolynomial{}, a};
  std::vector<BigInt> q(r.size() - db, BigInt(0));
  for (std::size_t i = r.size(); i-- > db;) {
    const BigInt f = r[i] * lead;  // lead is its own inverse
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= f * b.coefficients()[j];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

}  // namespace conzeta
