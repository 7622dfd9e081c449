#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "conzeta/matrix.hpp"
#include "conzeta/polynomial.hpp"

namespace conzeta {

namespace detail {

inline BigInt divide_by_index(const BigInt& v, long k) { return divide_exact(v, k); }
inline Polynomial<BigInt> divide_by_index(const Polynomial<BigInt>& v, long k) {
  return v.divided_exactly(BigInt(k));
}

}  // namespace detail

/// Coefficients p_0..p_n of the characteristic polynomial in the convention
/// det(A - xI) = sum_k p_k (-x)^(n-k), so p_0 = 1, p_1 = tr A, p_n = det A.
///
/// Faddeev-LeVerrier over an exact ring R; each step divides by k exactly.
template <class R>
std::vector<R> faddeev_leverrier(const Matrix<R>& a) {
  const auto n = a.size();
  std::vector<R> p(n + 1, R(0));
  p[0] = R(1);
  // c holds the monic coefficients of det(xI - A): c_{n-k} = (-1)^k p_k.
  Matrix<R> m(n);  // M_0 = 0
  R c_prev(1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c_prev;  // M_k = A M_{k-1} + c I
    const Matrix<R> am = a * m;
    R tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    const R c = detail::divide_by_index(R(0) - tr, static_cast<long>(k));
    p[k] = (k % 2 == 0) ? c : R(R(0) - c);
    c_prev = c;
    if (k < n) m = am;
  }
  return p;
}

/// The p_k as an integer polynomial: coefficient k is p_k. Equivalently
/// det(I + yA) as a polynomial in y.
inline IntPolynomial char_poly(const IntegerMatrix& a) { return IntPolynomial(faddeev_leverrier(a)); }

/// The same coefficients as an untrimmed list of length n + 1.
inline std::vector<BigInt> char_poly_coefficients(const IntegerMatrix& a) { return faddeev_leverrier(a); }

/// det(xI - A) in ascending powers of x, from the p_k list.
inline IntPolynomial standard_char_poly(const std::vector<BigInt>& p) {
  const auto n = p.size() - 1;
  std::vector<BigInt> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = (k % 2 == 0) ? p[k] : BigInt(-p[k]);
  return IntPolynomial(std::move(c));
}

inline bool is_palindromic(const std::vector<BigInt>& c) {
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

inline bool is_palindromic(const IntPolynomial& p) { return is_palindromic(p.coefficients()); }

struct PalindromeReduction {
  /// True if a factor (1 + x) was split off first (odd degree).
  bool odd_factor = false;
  /// q with p(x) = (1 + x)^[odd_factor] x^m q(x + 1/x).
  IntPolynomial q;
};

/// Writes a palindromic polynomial as x^m q(x + 1/x).
inline PalindromeReduction palindrome_reduce(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("cannot reduce the zero polynomial");
  if (p.coefficients().front() == 0) throw InvalidInput("palindrome reduction needs p(0) != 0");
  if (!is_palindromic(p)) throw InvalidInput("polynomial is not palindromic");
  PalindromeReduction out;
  IntPolynomial e = p;
  if (p.degree() % 2 == 1) {
    auto [quot, rem] = divide_monic(p, int_poly({1, 1}));
    if (!rem.is_zero()) throw InvariantViolation("odd palindrome not divisible by 1 + x");
    e = quot;
    out.odd_factor = true;
  }
  const auto m = static_cast<std::size_t>(e.degree() / 2);
  // x^j + x^-j = D_j(x + 1/x) with D_0 = 2, D_1 = u, D_{j+1} = u D_j - D_{j-1}.
  const IntPolynomial u = int_poly({0, 1});
  IntPolynomial d_prev = int_poly({2});
  IntPolynomial d_cur = u;
  IntPolynomial q = IntPolynomial::constant(e[m]);
  for (std::size_t j = 1; j <= m; ++j) {
    q += d_cur * e[m + j];
    IntPolynomial d_next = u * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  out.q = std::move(q);
  return out;
}

}  // namespace conzeta
