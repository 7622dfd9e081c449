#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "conzeta/complex.hpp"
#include "conzeta/matrix.hpp"
#include "conzeta/operators.hpp"

namespace conzeta {

inline constexpr double kSignTolerance = 1e-9;
inline constexpr double kSymmetryTolerance = 1e-12;

/// Sorted real spectrum with sign counts.
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;  // |lambda| <= tolerance
  double tolerance = kSignTolerance;

  std::size_t size() const noexcept { return eigenvalues.size(); }

  static Spectrum from_values(std::vector<double> v, double tol = kSignTolerance) {
    Spectrum s;
    std::sort(v.begin(), v.end());
    s.eigenvalues = std::move(v);
    s.tolerance = tol;
    for (double x : s.eigenvalues) {
      if (x > tol) ++s.positive;
      else if (x < -tol) ++s.negative;
      else ++s.zero;
    }
    return s;
  }
};

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  RealMatrix vectors;          // column j belongs to values[j]
};

namespace detail {

// Householder reduction to tridiagonal form followed by the implicit QL
// algorithm (the tred2/tql2 pair of EISPACK). V holds the matrix on entry and
// the eigenvectors on exit; d and e receive the diagonal and sub-diagonal.
inline void tred2(std::size_t n, std::vector<std::vector<double>>& V, std::vector<double>& d,
                  std::vector<double>& e) {
  for (std::size_t j = 0; j < n; ++j) d[j] = V[n - 1][j];
  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0, h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = V[i - 1][j];
        V[i][j] = 0.0;
        V[j][i] = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        V[j][i] = f;
        g = e[j] + V[j][j] * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += V[k][j] * d[k];
          e[k] += V[k][j] * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) V[k][j] -= (f * e[k] + g * d[k]);
        d[j] = V[i - 1][j];
        V[i][j] = 0.0;
      }
    }
    d[i] = h;
  }
  // Accumulate transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    V[n - 1][i] = V[i][i];
    V[i][i] = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = V[k][i + 1] / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += V[k][i + 1] * V[k][j];
        for (std::size_t k = 0; k <= i; ++k) V[k][j] -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) V[k][i + 1] = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = V[n - 1][j];
    V[n - 1][j] = 0.0;
  }
  V[n - 1][n - 1] = 1.0;
  e[0] = 0.0;
}

inline void tql2(std::size_t n, std::vector<std::vector<double>>& V, std::vector<double>& d,
                 std::vector<double>& e) {
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  double f = 0.0, tst1 = 0.0;
  const double eps = std::ldexp(1.0, -52);
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m == n) m = n - 1;
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > 60) throw InvariantViolation("QL iteration did not converge");
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;
        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t i = m; i-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[i];
          h = c * p;
          r = std::hypot(p, e[i]);
          e[i + 1] = s * r;
          s = e[i] / r;
          c = p / r;
          p = c * d[i] - s * g;
          d[i + 1] = h + s * (c * g + s * d[i]);
          for (std::size_t k = 0; k < n; ++k) {
            h = V[k][i + 1];
            V[k][i + 1] = s * V[k][i] + c * h;
            V[k][i] = c * V[k][i] - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
  // Sort ascending together with the vectors.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::size_t k = i;
    double p = d[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[j] < p) {
        k = j;
        p = d[j];
      }
    }
    if (k != i) {
      d[k] = d[i];
      d[i] = p;
      for (std::size_t j = 0; j < n; ++j) std::swap(V[j][i], V[j][k]);
    }
  }
}

inline void check_symmetric(const RealMatrix& a) {
  const auto n = a.size();
  double scale = 0.0;
  for (double v : a.data()) scale = std::max(scale, std::abs(v));
  const double tol = kSymmetryTolerance * std::max(1.0, scale);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > tol) throw InvalidInput("matrix is not symmetric");
}

}  // namespace detail

/// Eigenvalues and orthonormal eigenvectors of a real symmetric matrix.
inline EigenDecomposition symmetric_eigen(const RealMatrix& a) {
  detail::check_symmetric(a);
  const auto n = a.size();
  EigenDecomposition out;
  if (n == 0) return out;
  std::vector<std::vector<double>> V(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) V[i][j] = 0.5 * (a(i, j) + a(j, i));
  std::vector<double> d(n), e(n);
  if (n == 1) {
    out.values = {V[0][0]};
    out.vectors = RealMatrix::identity(1);
    return out;
  }
  detail::tred2(n, V, d, e);
  detail::tql2(n, V, d, e);
  out.values = d;
  out.vectors = RealMatrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.vectors(i, j) = V[i][j];
  return out;
}

inline Spectrum symmetric_eigenvalues(const RealMatrix& a, double tol = kSignTolerance) {
  return Spectrum::from_values(symmetric_eigen(a).values, tol);
}

inline Spectrum symmetric_eigenvalues(const IntegerMatrix& a, double tol = kSignTolerance) {
  return symmetric_eigenvalues(to_real(a), tol);
}

/// Spectrum of the connection Laplacian. L is invertible, so no eigenvalue
/// may fall inside the sign tolerance.
inline Spectrum connection_spectrum(const SimplicialComplex& g) {
  auto s = symmetric_eigenvalues(connection_laplacian_real(g));
  if (s.zero != 0) throw InvariantViolation("connection Laplacian has an eigenvalue near 0");
  return s;
}

/// max |A - Q diag(values) Q^T| entrywise.
inline double backward_error(const RealMatrix& a, const EigenDecomposition& e) {
  const auto n = a.size();
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += e.vectors(i, k) * e.values[k] * e.vectors(j, k);
      err = std::max(err, std::abs(a(i, j) - s));
    }
  return err;
}

/// Number of eigenvalues within `tol` of +1 and of -1.
inline std::pair<std::size_t, std::size_t> count_near_unit(const Spectrum& s, double tol = kSignTolerance) {
  std::size_t plus = 0, minus = 0;
  for (double x : s.eigenvalues) {
    if (std::abs(x - 1.0) <= tol) ++plus;
    if (std::abs(x + 1.0) <= tol) ++minus;
  }
  return {plus, minus};
}

}  // namespace conzeta
