#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "conzeta/complex.hpp"
#include "conzeta/matrix.hpp"
#include "conzeta/numeric.hpp"

namespace conzeta {

/// L(x,y) = 1 if the simplices x and y intersect, 0 otherwise.
inline IntegerMatrix connection_laplacian(const SimplicialComplex& g) {
  const auto n = g.size();
  IntegerMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g[i].intersects(g[j])) l(i, j) = l(j, i) = 1;
    }
  }
  return l;
}

inline RealMatrix connection_laplacian_real(const SimplicialComplex& g) {
  const auto n = g.size();
  RealMatrix l(n);
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g[i].intersects(g[j])) l(i, j) = l(j, i) = 1.0;
    }
  }
  return l;
}

/// D = d + d^T, where the facet of x obtained by deleting its k-th smallest
/// vertex (k counted from 0) carries the sign (-1)^k.
inline IntegerMatrix dirac_operator(const SimplicialComplex& g) {
  const auto n = g.size();
  IntegerMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = g[i];
    if (x.size() < 2) continue;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const auto j = g.index_of(x.without(k));
      const int sign = (k % 2 == 0) ? 1 : -1;
      d(j, i) = sign;
      d(i, j) = sign;
    }
  }
  return d;
}

inline IntegerMatrix hodge_laplacian(const SimplicialComplex& g) {
  const auto d = dirac_operator(g);
  return d * d;
}

namespace detail {

struct Overflow {};

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t exact_div(std::int64_t a, std::int64_t b) {
  if (a % b != 0) throw InvariantViolation("inexact Bareiss division");
  return a / b;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }
inline BigInt exact_div(const BigInt& a, const BigInt& b) { return divide_exact(a, b); }

template <class T>
struct GaussJordan {
  T det;                          // determinant of the input
  T scale;                        // final pivot d
  std::optional<Matrix<T>> adj;   // d * A^{-1} when requested and det != 0
};

// Fraction-free Gauss-Jordan on [A | I]. After step k every entry is a
// (k+1)x(k+1) minor of the augmented matrix, so all divisions are exact. At
// the end the left block is d*I and the right block is d*A^{-1}.
template <class T>
GaussJordan<T> bareiss(const Matrix<T>& a, bool want_inverse) {
  const auto n = a.size();
  const auto w = want_inverse ? 2 * n : n;
  std::vector<std::vector<T>> m(n, std::vector<T>(w, T(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
    if (want_inverse) m[i][n + i] = T(1);
  }
  T prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == T(0)) ++p;
    if (p == n) return {T(0), T(0), std::nullopt};
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    const T pivot = m[k][k];
    const std::size_t lo = want_inverse ? 0 : k + 1;
    for (std::size_t i = lo; i < n; ++i) {
      if (i == k) continue;
      const T f = m[i][k];
      for (std::size_t j = 0; j < w; ++j) {
        if (j == k) continue;
        m[i][j] = exact_div(sub(mul(pivot, m[i][j]), mul(f, m[k][j])), prev);
      }
      m[i][k] = T(0);
    }
    prev = pivot;
  }
  GaussJordan<T> out{sign > 0 ? prev : T(0) - prev, prev, std::nullopt};
  if (want_inverse) {
    Matrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) r(i, j) = m[i][n + j];
    out.adj = std::move(r);
  }
  return out;
}

inline std::optional<Matrix<std::int64_t>> narrow(const IntegerMatrix& a) {
  Matrix<std::int64_t> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a(i, j) > INT64_MAX / 4 || a(i, j) < INT64_MIN / 4) return std::nullopt;
      m(i, j) = a(i, j).convert_to<std::int64_t>();
    }
  return m;
}

// Runs in checked 64-bit arithmetic and falls back to big integers on overflow.
inline GaussJordan<BigInt> bareiss_exact(const IntegerMatrix& a, bool want_inverse) {
  if (auto small = narrow(a)) {
    try {
      auto r = bareiss(*small, want_inverse);
      GaussJordan<BigInt> out{BigInt(r.det), BigInt(r.scale), std::nullopt};
      if (r.adj) out.adj = r.adj->map<BigInt>([](std::int64_t v) { return BigInt(v); });
      return out;
    } catch (const Overflow&) {
    }
  }
  return bareiss(a, want_inverse);
}

}  // namespace detail

inline BigInt bareiss_det(const IntegerMatrix& a) { return detail::bareiss_exact(a, false).det; }

/// Exact inverse of an integer matrix with determinant +1 or -1.
inline IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  auto r = detail::bareiss_exact(a, true);
  if (r.det != 1 && r.det != -1) {
    throw InvariantViolation("matrix is not unimodular: det = " + r.det.str());
  }
  IntegerMatrix inv = std::move(*r.adj);
  if (r.scale == -1) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) inv(i, j) = -inv(i, j);
  }
  return inv;
}

/// Exact Green function g = L^{-1}.
inline IntegerMatrix green_matrix(const SimplicialComplex& g) {
  return unimodular_inverse(connection_laplacian(g));
}

inline BigInt sum_entries(const IntegerMatrix& m) {
  BigInt s(0);
  for (const auto& v : m.data()) s += v;
  return s;
}

/// Sum of all entries of the Green function.
inline std::int64_t total_energy(const SimplicialComplex& g) {
  return sum_entries(green_matrix(g)).convert_to<std::int64_t>();
}

/// det L, which is +1 or -1.
inline int fredholm_det_sign(const SimplicialComplex& g) {
  const auto d = bareiss_det(connection_laplacian(g));
  if (d == 1) return 1;
  if (d == -1) return -1;
  throw InvariantViolation("connection Laplacian determinant is " + d.str());
}

/// L - L^{-1}.
inline IntegerMatrix hydrogen_operator(const SimplicialComplex& g) {
  const auto l = connection_laplacian(g);
  return l - unimodular_inverse(l);
}

/// Exact trace of A^m for m >= 0.
inline BigInt trace_power(const IntegerMatrix& a, int m) {
  if (m < 0) throw InvalidInput("negative power");
  auto p = IntegerMatrix::identity(a.size());
  for (int i = 0; i < m; ++i) p = p * a;
  return p.trace();
}

}  // namespace conzeta
