#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "conzeta/complex.hpp"
#include "conzeta/eigen.hpp"
#include "conzeta/gamma.hpp"
#include "conzeta/generators.hpp"
#include "conzeta/operators.hpp"
#include "conzeta/quadrature.hpp"
#include "conzeta/roots.hpp"
#include "conzeta/zeta.hpp"

namespace conzeta {

/// f^+(x) and f^-(x), the two roots of lambda - 1/lambda = x.
template <class Real>
std::pair<Real, Real> split_eigenvalue(const Real& x) {
  using std::sqrt;
  const Real r = sqrt(x * x + Real(4));
  return {(x + r) / Real(2), (x - r) / Real(2)};
}

/// The 2n values f^{+-}(4 cos^2(pi k / n)), k = 1..n, ascending. For even n
/// the list equals the one built from 4 sin^2(pi k / n); for odd n it does not,
/// and only the cosine list is the spectrum of C_n.
template <class Real>
std::vector<Real> circular_eigenvalues(int n) {
  using std::cos;
  if (n < 3) throw InvalidInput("circular spectrum needs n >= 3");
  const Real pi = boost::math::constants::pi<Real>();
  std::vector<Real> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const Real ck = cos(pi * Real(k) / Real(n));
    auto [p, m] = split_eigenvalue(Real(4) * ck * ck);
    out.push_back(p);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Spectrum circular_spectrum_explicit(int n) { return Spectrum::from_values(circular_eigenvalues<double>(n)); }

/// max |explicit - numeric| over the sorted circular spectrum.
inline double circular_spectrum_gap(int n) {
  const auto a = circular_spectrum_explicit(n);
  const auto b = connection_spectrum(circular_complex(n));
  double gap = 0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a.eigenvalues[i] - b.eigenvalues[i]));
  return gap;
}

/// max distance between the multiset {lambda - 1/lambda} over the explicit
/// circular spectrum and {4 cos^2(pi k/n)} taken twice.
inline double pullback_residual(int n) {
  const auto spec = circular_eigenvalues<double>(n);
  std::vector<double> t, mu;
  for (double l : spec) t.push_back(l - 1.0 / l);
  for (int k = 1; k <= n; ++k) {
    const double c = std::cos(std::numbers::pi * k / n);
    mu.push_back(4 * c * c);
    mu.push_back(4 * c * c);
  }
  std::sort(t.begin(), t.end());
  std::sort(mu.begin(), mu.end());
  double gap = 0;
  for (std::size_t i = 0; i < t.size(); ++i) gap = std::max(gap, std::abs(t[i] - mu[i]));
  return gap;
}

/// With simplices ordered {1},{1,2},{2},{2,3},...,{n},{n,1}, the matrix
/// L - L^{-1} of C_n is 2 + Q + Q^T with Q the cyclic shift by two places.
inline bool circulant_check(int n) {
  const auto g = circular_complex(n);
  std::vector<std::size_t> order;
  for (Vertex k = 1; k <= n; ++k) {
    order.push_back(g.index_of(Simplex{k}));
    order.push_back(g.index_of(Simplex{k, k % n + 1}));
  }
  const auto m = hydrogen_operator(g).submatrix(order, order);
  const auto size = m.size();
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      int expected = 0;
      if (i == j) expected += 2;
      if (j == (i + 2) % size) expected += 1;
      if (i == (j + 2) % size) expected += 1;
      if (m(i, j) != expected) return false;
    }
  }
  return true;
}

struct QuadratureConfig {
  std::size_t trapezoid_nodes = 2048;  // form c
  std::size_t gl_nodes = 512;          // forms b, d, e
  double tolerance = 1e-8;             // allowed spread between forms
  std::size_t max_nodes = 65536;       // cap of the doubling ladder

  void validate() const {
    if (trapezoid_nodes < 16 || gl_nodes < 16) throw InvalidInput("quadrature needs at least 16 nodes");
    if (!(tolerance > 0)) throw InvalidInput("quadrature tolerance must be positive");
    if (max_nodes < std::max(trapezoid_nodes, gl_nodes)) throw InvalidInput("node cap below node count");
  }
};

/// The four integral forms of z(it) at one t.
struct LimitEval {
  double t = 0;
  double smooth_integral = 0;   // periodic trapezoid, the reference
  double cos_transform = 0;     // cosine transform of the density h on [0, log(2+sqrt 5)]
  double v_integral = 0;        // integral over theta after v = sin^2 theta
  double abelian_integral = 0;  // integral over z in [1, 2+sqrt 5]
  double imag_residual = 0;     // |Im| of the complex evaluation on the imaginary axis
  double spread = 0;
  std::size_t trapezoid_nodes = 0;
  std::size_t gl_nodes = 0;

  std::vector<double> values() const { return {smooth_integral, cos_transform, v_integral, abelian_integral}; }
};

namespace limit_forms {

inline constexpr double kA = 2.0 + 2.23606797749978969640917366873128;  // 2 + sqrt 5
inline const double kY = std::log(kA);                                    // asinh 2

/// Form c: mean over k of 2 cos(2t asinh(2 sin^2(pi k/N))).
template <class Real>
Real smooth(const Real& t, std::size_t n) {
  using std::asinh;
  using std::cos;
  using std::log;
  using std::sin;
  using std::sqrt;
  const Real pi = boost::math::constants::pi<Real>();
  return periodic_trapezoid<Real>(
      [&](std::size_t k, std::size_t nn) {
        const Real s = sin(pi * Real(k) / Real(nn));
        const Real u = Real(2) * s * s;
        return Real(2) * cos(Real(2) * t * log(u + sqrt(u * u + Real(1))));
      },
      n);
}

/// Form c at complex w: mean of 2 cosh(2 w asinh(2 sin^2(pi k/N))). On w = it it is z(it).
inline Complex smooth_complex(Complex w, std::size_t n) {
  Complex s = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double sk = std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    s += 2.0 * std::cosh(2.0 * w * std::asinh(2 * sk * sk));
  }
  return s / static_cast<double>(n);
}

/// Form d: (4/pi) int_0^{pi/2} cos(2t log(sqrt(4 sin^4 + 1) + 2 sin^2)) dtheta.
inline double v_form(double t, std::size_t n) {
  return 4.0 / std::numbers::pi * integrate_gl(
                                       [&](double th) {
                                         const double u = 2 * std::sin(th) * std::sin(th);
                                         return std::cos(2 * t * std::log(std::sqrt(u * u + 1) + u));
                                       },
                                       0.0, std::numbers::pi / 2, n);
}

/// Form b: (2/pi) int_0^Y cos(2tu) cosh u / sqrt(sinh u (2 - sinh u)) du with
/// u = Y sin^2 phi. Y - u = Y cos^2 phi and 2 - sinh u = 2 cosh((Y+u)/2) sinh((Y-u)/2)
/// keep the endpoint factors free of cancellation.
inline double cos_form(double t, std::size_t n) {
  const double y = kY;
  return 2.0 / std::numbers::pi * integrate_gl(
                                       [&](double ph) {
                                         const double sp = std::sin(ph), cp = std::cos(ph);
                                         const double u = y * sp * sp;
                                         const double ymu = y * cp * cp;
                                         const double den = std::sqrt(std::sinh(u) * 2 * std::cosh((y + u) / 2) *
                                                                      std::sinh(ymu / 2));
                                         if (den == 0.0) return 0.0;
                                         return 2 * y * sp * cp * std::cosh(u) * std::cos(2 * t * u) / den;
                                       },
                                       0.0, std::numbers::pi / 2, n);
}

/// Form e: (2/pi) int_1^a (z^2+1) cos(2t log z) / (z sqrt(p(z))) dz with
/// p = (1+z)(z-1)(a-z)(z+1/a). The substitution z = (1+a)/2 - (a-1)/2 cos phi
/// cancels the square root zeros at z = 1 and z = a.
inline double abelian_form(double t, std::size_t n) {
  const double a = kA;
  return integrate_gl(
      [&](double ph) {
        const double z = (1 + a) / 2 - (a - 1) / 2 * std::cos(ph);
        return (z * z + 1) * 2 * std::cos(2 * t * std::log(z)) /
               (std::numbers::pi * z * std::sqrt((z + 1) * (z + 1 / a)));
      },
      0.0, std::numbers::pi, n);
}

}  // namespace limit_forms

/// z(it) by all four integral forms, doubling the node counts until they
/// agree within cfg.tolerance or the cap is reached.
inline LimitEval limit_zeta(double t, const QuadratureConfig& cfg = {}) {
  cfg.validate();
  if (!std::isfinite(t)) throw InvalidInput("t must be finite");
  std::size_t nt = cfg.trapezoid_nodes, ng = cfg.gl_nodes;
  for (;;) {
    LimitEval e;
    e.t = t;
    e.trapezoid_nodes = nt;
    e.gl_nodes = ng;
    e.smooth_integral = limit_forms::smooth<double>(t, nt);
    e.cos_transform = limit_forms::cos_form(t, ng);
    e.v_integral = limit_forms::v_form(t, ng);
    e.abelian_integral = limit_forms::abelian_form(t, ng);
    e.imag_residual = std::abs(limit_forms::smooth_complex(Complex(0, t), nt).imag());
    const auto v = e.values();
    e.spread = *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
    if (e.spread <= cfg.tolerance) return e;
    if (2 * nt > cfg.max_nodes || 2 * ng > cfg.max_nodes) {
      throw CrossValidationError("limit zeta forms disagree at t = " + format_double(t) + ", spread " +
                                     format_double(e.spread),
                                 v);
    }
    nt *= 2;
    ng *= 2;
  }
}

/// z(w) for complex w via the smooth form; z(it) is the real limit function.
inline Complex limit_zeta_at(Complex w, std::size_t nodes = 2048) {
  return limit_forms::smooth_complex(w, nodes);
}

/// Roots of t -> z(it) on [0, t_max]: sign changes on a 0.01 grid, then bisection.
inline std::vector<double> limit_roots(double t_max, const QuadratureConfig& cfg = {}, double step = 0.01) {
  cfg.validate();
  if (!(t_max > 0)) throw InvalidInput("t_max must be positive");
  const auto f = [&](double t) { return limit_forms::smooth<double>(t, cfg.trapezoid_nodes); };
  std::vector<double> roots;
  const auto steps = static_cast<std::size_t>(std::ceil(t_max / step));
  double a = 0, fa = f(0);
  for (std::size_t i = 1; i <= steps; ++i) {
    const double b = std::min(t_max, static_cast<double>(i) * step);
    const double fb = f(b);
    if (fa == 0.0) {
      roots.push_back(a);
    } else if ((fa < 0) != (fb < 0) && fb != 0.0) {
      double lo = a, hi = b, flo = fa;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(a);
  return roots;
}

/// z(w) = (1/N) sum_k 2 cosh(2 w a_k) as an exponential sum in w, for root scans
/// of the limit function off the imaginary axis.
inline ExponentialSum limit_exponential_sum(std::size_t nodes = 512) {
  std::vector<double> r;
  for (std::size_t k = 0; k < nodes; ++k) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(nodes));
    const double a = std::asinh(2 * s * s);
    r.push_back(2 * a);
    r.push_back(-2 * a);
  }
  return ExponentialSum(std::move(r), 1.0 / static_cast<double>(nodes));
}

struct OffAxisReport {
  RootList scan;
  std::vector<Root> off_axis;  // roots with |Re w| above the axis tolerance
};

/// Root scan of the limit function on a rectangle in w; any root away from
/// the imaginary axis is returned separately.
inline OffAxisReport limit_off_axis_scan(const Rect& rect, const Resolution& res, double tol = 1e-10,
                                         double axis_tol = 1e-6, std::size_t nodes = 512) {
  OffAxisReport r{root_scan(limit_exponential_sum(nodes), rect, res, tol), {}};
  for (const auto& x : r.scan.roots) {
    if (std::abs(x.s.real()) > axis_tol) r.off_axis.push_back(x);
  }
  return r;
}

struct RiemannSumError {
  double error = 0;         // |zeta_{C_n}(s)/n - z(s)|
  double scaled_probe = 0;  // m^2 |zeta_{C_n}(s) - m Z(s)|, m = 2n, Z = z/2
};

/// Discretisation error of the circle zeta against the limit function at complex s.
inline RiemannSumError riemann_sum_error(int n, Complex s, const QuadratureConfig& cfg = {}) {
  if (n < 8) throw InvalidInput("Riemann sum error needs n >= 8");
  cfg.validate();
  const Complex finite = zeta_L2(circular_spectrum_explicit(n), s);
  const Complex limit = limit_zeta_at(s, cfg.trapezoid_nodes);
  const double nd = n;
  RiemannSumError r;
  r.error = std::abs(finite / nd - limit);
  const double m = 2 * nd;
  r.scaled_probe = m * m * std::abs(finite - m * limit / 2.0);
  return r;
}

/// |zeta_{C_n}(it)/n - z(it)| in the arithmetic of Real. In double the error
/// reaches rounding level already for n around 40, so the decay is only
/// visible with a wide type such as cpp_bin_float.
template <class Real>
Real riemann_sum_error_imag(int n, const Real& t, std::size_t reference_nodes) {
  using std::abs;
  using std::cos;
  using std::log;
  if (n < 8) throw InvalidInput("Riemann sum error needs n >= 8");
  Real finite(0);
  for (const auto& l : circular_eigenvalues<Real>(n)) finite += cos(t * log(l * l));
  finite /= Real(n);
  return abs(finite - limit_forms::smooth<Real>(t, reference_nodes));
}

/// Least squares slope of log(error) against log(n), negated: the power p in error ~ n^-p.
inline double fit_power_decay(const std::vector<double>& ns, const std::vector<double>& errors) {
  if (ns.size() != errors.size() || ns.size() < 2) throw InvalidInput("decay fit needs two or more points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const auto k = static_cast<double>(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double x = std::log(ns[i]), y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return -(k * sxy - sx * sy) / (k * sxx - sx * sx);
}

/// Least squares rate c in error ~ exp(-c n).
inline double fit_exponential_decay(const std::vector<double>& ns, const std::vector<double>& errors) {
  std::vector<double> en;
  for (double n : ns) en.push_back(std::exp(n));
  return fit_power_decay(en, errors);
}

/// g(s) = 4 Gamma((1+s)/2) / (sqrt(pi) Gamma(s/2 + 1)), the Hodge limit zeta.
inline Complex hodge_limit_g(Complex s) {
  return 4.0 * std::exp(log_gamma((1.0 + s) / 2.0) - log_gamma(s / 2.0 + 1.0)) / std::sqrt(std::numbers::pi);
}

/// zeta_Z(u) = Gamma(1/2 - u) / (2^{2u} sqrt(pi) Gamma(1 - u)).
inline Complex hodge_zeta_limit(Complex u) {
  return std::exp(log_gamma(0.5 - u) - log_gamma(1.0 - u) - 2.0 * u * std::log(2.0)) / std::sqrt(std::numbers::pi);
}

/// h_n(s) = (4 pi)^{s/2} Gamma(s/2) n^{-s} (zeta_n(s) - n zeta_Z(s/2)) with the
/// discrete Hodge zeta zeta_n(s) = 2^{-s} sum_{k=1}^{n-1} sin(pi k/n)^{-s}.
inline Complex friedli_karlsson_h(int n, Complex s) {
  if (n < 8) throw InvalidInput("Friedli-Karlsson h needs n >= 8");
  Complex z = 0;
  for (int k = 1; k < n; ++k) z += std::exp(-s * std::log(std::sin(std::numbers::pi * k / n)));
  z *= std::exp(-s * std::log(2.0));
  const Complex diff = z - static_cast<double>(n) * hodge_zeta_limit(s / 2.0);
  const Complex log_prefactor =
      (s / 2.0) * std::log(4 * std::numbers::pi) + log_gamma(s / 2.0) - s * std::log(static_cast<double>(n));
  return std::exp(log_prefactor) * diff;
}

/// F_z(s) = (z^2+1) z^{-1-s} (1 + z^{2s}) / (2 sqrt(p(z))), 1 < z < 2 + sqrt 5.
inline Complex abelian_integrand(double z, Complex s) {
  const double a = limit_forms::kA;
  const double p = (1 + z) * (z - 1) * (a - z) * (z + 1 / a);
  return (z * z + 1) * std::exp((-1.0 - s) * std::log(z)) * (1.0 + std::exp(2.0 * s * std::log(z))) /
         (2 * std::sqrt(p));
}

/// |numerical d/ds log F_z(s) - log(z)(1 - 2/(1 + z^{2s}))|.
inline double abelian_log_derivative_residual(double z, Complex s) {
  const double h = 1e-6;
  const Complex numeric =
      (abelian_integrand(z, s + h) - abelian_integrand(z, s - h)) / (2 * h) / abelian_integrand(z, s);
  const Complex formula = std::log(z) * (1.0 - 2.0 / (1.0 + std::exp(2.0 * s * std::log(z))));
  return std::abs(numeric - formula);
}

struct LidskiiResult {
  double bound = 0;     // sum |A - B|_ij
  double distance = 0;  // || sort(sigma(A)) - sort(sigma(B)) ||_1
};

/// The l1 distance of the spectra is at most the entrywise l1 norm of A - B.
inline LidskiiResult lidskii_gap_bound(const RealMatrix& a, const RealMatrix& b) {
  if (a.size() != b.size()) throw InvalidInput("Lidskii bound needs equal sizes");
  LidskiiResult r;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r.bound += std::abs(a(i, j) - b(i, j));
  const auto sa = symmetric_eigenvalues(a).eigenvalues;
  const auto sb = symmetric_eigenvalues(b).eigenvalues;
  for (std::size_t i = 0; i < sa.size(); ++i) r.distance += std::abs(sa[i] - sb[i]);
  double scale = 1;
  for (double v : a.data()) scale = std::max(scale, std::abs(v));
  if (r.distance > r.bound + 1e-10 * scale * static_cast<double>(a.size())) {
    throw InvariantViolation("spectral distance " + format_double(r.distance) + " exceeds bound " +
                             format_double(r.bound));
  }
  return r;
}

}  // namespace conzeta
