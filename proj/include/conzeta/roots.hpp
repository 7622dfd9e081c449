#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "conzeta/eigen.hpp"
#include "conzeta/numeric.hpp"

namespace conzeta {

/// f(s) = c * sum_i exp(-s r_i) for real rates r_i and a scale c.
/// zeta_{L^2} is the case r_i = log(lambda_i^2), c = 1.
class ExponentialSum {
 public:
  explicit ExponentialSum(std::vector<double> rates, double scale = 1.0) : r_(std::move(rates)), c_(scale) {}

  static ExponentialSum zeta_L2(const Spectrum& spec) {
    std::vector<double> r;
    r.reserve(spec.size());
    for (double l : spec.eigenvalues) {
      if (l == 0.0) throw DomainError("zero eigenvalue in zeta");
      r.push_back(std::log(l * l));
    }
    return ExponentialSum(std::move(r));
  }

  const std::vector<double>& rates() const noexcept { return r_; }
  double scale() const noexcept { return c_; }

  Complex value(Complex s) const {
    Complex z = 0;
    for (double r : r_) z += std::exp(-s * r);
    return c_ * z;
  }
  Complex derivative(Complex s) const {
    Complex z = 0;
    for (double r : r_) z -= r * std::exp(-s * r);
    return c_ * z;
  }

 private:
  std::vector<double> r_;
  double c_;
};

struct Rect {
  double x_min = -3, x_max = 3, y_min = 0, y_max = 60;

  void validate() const {
    if (!(x_min < x_max && y_min < y_max)) throw InvalidInput("rectangle must have positive extent");
  }
  bool contains(Complex s) const {
    return s.real() >= x_min && s.real() <= x_max && s.imag() >= y_min && s.imag() <= y_max;
  }
};

struct Resolution {
  std::size_t nx = 600, ny = 1200;

  void validate() const {
    if (nx < 2 || ny < 2) throw InvalidInput("resolution must be at least 2 x 2");
  }
};

/// |f| sampled on a rectangle; value(i, j) sits at x_i, y_j and rows run over y.
struct ZetaGrid {
  Rect rect;
  Resolution res;
  std::vector<double> values;  // index j * nx + i

  double x(std::size_t i) const {
    return rect.x_min + (rect.x_max - rect.x_min) * static_cast<double>(i) / static_cast<double>(res.nx - 1);
  }
  double y(std::size_t j) const {
    return rect.y_min + (rect.y_max - rect.y_min) * static_cast<double>(j) / static_cast<double>(res.ny - 1);
  }
  double dx() const { return (rect.x_max - rect.x_min) / static_cast<double>(res.nx - 1); }
  double dy() const { return (rect.y_max - rect.y_min) / static_cast<double>(res.ny - 1); }
  double at(std::size_t i, std::size_t j) const { return values[j * res.nx + i]; }
};

inline ZetaGrid zeta_grid(const ExponentialSum& f, const Rect& rect, const Resolution& res) {
  rect.validate();
  res.validate();
  ZetaGrid g{rect, res, std::vector<double>(res.nx * res.ny)};
  const auto& r = f.rates();
  const auto m = r.size();
  // exp(-(x + iy) r) = exp(-x r) * exp(-i y r); tabulate both factors.
  std::vector<double> ex(res.nx * m);
  for (std::size_t i = 0; i < res.nx; ++i)
    for (std::size_t k = 0; k < m; ++k) ex[i * m + k] = std::exp(-g.x(i) * r[k]);
  std::vector<double> c(m), s(m);
  for (std::size_t j = 0; j < res.ny; ++j) {
    const double y = g.y(j);
    for (std::size_t k = 0; k < m; ++k) {
      c[k] = std::cos(y * r[k]);
      s[k] = -std::sin(y * r[k]);
    }
    for (std::size_t i = 0; i < res.nx; ++i) {
      const double* e = &ex[i * m];
      double re = 0, im = 0;
      for (std::size_t k = 0; k < m; ++k) {
        re += e[k] * c[k];
        im += e[k] * s[k];
      }
      g.values[j * res.nx + i] = std::abs(f.scale()) * std::hypot(re, im);
    }
  }
  return g;
}

inline ZetaGrid zeta_grid(const Spectrum& spec, const Rect& rect, const Resolution& res) {
  return zeta_grid(ExponentialSum::zeta_L2(spec), rect, res);
}

struct Root {
  Complex s;
  double residual;
};

struct RootList {
  std::vector<Root> roots;  // sorted by imaginary part, then real part
  Rect rect;
  double tolerance = 0;
  double separation = 0;        // dedup radius
  std::size_t seeds = 0;        // grid local minima tried
  std::size_t nonconverged = 0;  // Newton gave up
  std::size_t rejected = 0;     // converged outside the rectangle or above tolerance
  std::string method = "grid local minima + Newton";

  double max_abs_real() const {
    double m = 0;
    for (const auto& r : roots) m = std::max(m, std::abs(r.s.real()));
    return m;
  }
};

inline constexpr int kNewtonMaxIterations = 100;

/// Newton's method on f; returns false if it does not settle.
inline bool newton_refine(const ExponentialSum& f, Complex& s) {
  for (int it = 0; it < kNewtonMaxIterations; ++it) {
    const Complex v = f.value(s);
    const Complex d = f.derivative(s);
    if (d == Complex(0)) return false;
    const Complex step = v / d;
    s -= step;
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) return false;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(s))) return true;
  }
  return false;
}

inline RootList root_scan(const ExponentialSum& f, const Rect& rect, const Resolution& res, double tol) {
  if (!(tol > 0)) throw InvalidInput("root tolerance must be positive");
  const auto grid = zeta_grid(f, rect, res);
  RootList out;
  out.rect = rect;
  out.tolerance = tol;
  out.separation = 0.5 * std::min(grid.dx(), grid.dy());
  std::vector<Root> found;
  for (std::size_t j = 0; j < res.ny; ++j) {
    for (std::size_t i = 0; i < res.nx; ++i) {
      const double v = grid.at(i, j);
      bool minimum = true;
      for (int dj = -1; dj <= 1 && minimum; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (!di && !dj) continue;
          const auto ii = static_cast<std::ptrdiff_t>(i) + di;
          const auto jj = static_cast<std::ptrdiff_t>(j) + dj;
          if (ii < 0 || jj < 0 || ii >= static_cast<std::ptrdiff_t>(res.nx) ||
              jj >= static_cast<std::ptrdiff_t>(res.ny)) {
            continue;
          }
          if (grid.at(static_cast<std::size_t>(ii), static_cast<std::size_t>(jj)) < v) {
            minimum = false;
            break;
          }
        }
      }
      if (!minimum) continue;
      ++out.seeds;
      Complex s(grid.x(i), grid.y(j));
      if (!newton_refine(f, s)) {
        ++out.nonconverged;
        continue;
      }
      const double resid = std::abs(f.value(s));
      if (!rect.contains(s) || !(resid < tol)) {
        ++out.rejected;
        continue;
      }
      found.push_back({s, resid});
    }
  }
  std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
    if (a.s.imag() != b.s.imag()) return a.s.imag() < b.s.imag();
    return a.s.real() < b.s.real();
  });
  for (const auto& r : found) {
    bool dup = false;
    for (const auto& k : out.roots) {
      if (std::abs(k.s - r.s) < out.separation) {
        dup = true;
        break;
      }
    }
    if (!dup) out.roots.push_back(r);
  }
  return out;
}

inline RootList root_scan(const Spectrum& spec, const Rect& rect, const Resolution& res, double tol) {
  return root_scan(ExponentialSum::zeta_L2(spec), rect, res, tol);
}

inline void write_grid_csv(std::ostream& out, const ZetaGrid& g) {
  out << "x,y,abs_zeta\n";
  for (std::size_t j = 0; j < g.res.ny; ++j)
    for (std::size_t i = 0; i < g.res.nx; ++i)
      out << format_double(g.x(i)) << ',' << format_double(g.y(j)) << ',' << format_double(g.at(i, j)) << '\n';
}

inline void write_root_json(std::ostream& out, Complex s, double residual) {
  out << "{\"re\":" << format_double(s.real()) << ",\"im\":" << format_double(s.imag())
      << ",\"residual\":" << format_double(residual) << "}\n";
}

inline void write_roots_jsonl(std::ostream& out, const RootList& roots) {
  for (const auto& r : roots.roots) write_root_json(out, r.s, r.residual);
}

}  // namespace conzeta
