#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "conzeta/eigen.hpp"
#include "conzeta/numeric.hpp"
#include "conzeta/operators.hpp"

namespace conzeta {

/// log(lambda) on the upper branch: ln|lambda| + i*pi for lambda < 0.
inline Complex upper_log(double lambda) {
  if (lambda == 0.0) throw DomainError("log of a zero eigenvalue");
  return {std::log(std::abs(lambda)), lambda < 0 ? std::numbers::pi : 0.0};
}

/// zeta_L(s) = sum lambda^{-s}, negative eigenvalues on the upper branch.
inline Complex zeta_L(const Spectrum& spec, Complex s) {
  Complex z = 0;
  for (double l : spec.eigenvalues) z += std::exp(-s * upper_log(l));
  return z;
}

inline Complex zeta_L_derivative(const Spectrum& spec, Complex s) {
  Complex z = 0;
  for (double l : spec.eigenvalues) {
    const Complex lg = upper_log(l);
    z -= lg * std::exp(-s * lg);
  }
  return z;
}

/// zeta_{L^2}(s) = sum (lambda^2)^{-s}.
inline Complex zeta_L2(const Spectrum& spec, Complex s) {
  Complex z = 0;
  for (double l : spec.eigenvalues) z += std::exp(-s * std::log(l * l));
  return z;
}

inline Complex zeta_L2_derivative(const Spectrum& spec, Complex s) {
  Complex z = 0;
  for (double l : spec.eigenvalues) {
    const double lg = std::log(l * l);
    z -= lg * std::exp(-s * lg);
  }
  return z;
}

/// zeta_L'(0) = -sum log(lambda), evaluated in closed form.
inline Complex zeta_derivative_0(const Spectrum& spec) {
  Complex z = 0;
  for (double l : spec.eigenvalues) z -= upper_log(l);
  return z;
}

inline constexpr double kZetaIntegerTolerance = 1e-6;

namespace detail {

inline std::int64_t round_checked(double v, const char* what) {
  const auto r = round_to_int(v);
  if (std::abs(v - static_cast<double>(r)) > kZetaIntegerTolerance) {
    throw InvariantViolation(std::string(what) + " is not an integer: " + format_double(v));
  }
  return r;
}

}  // namespace detail

/// chi = zeta(0) - 2i zeta'(0)/pi.
inline std::int64_t euler_from_zeta(const Spectrum& spec) {
  const Complex v = zeta_L(spec, 0.0) - Complex(0, 2) * zeta_derivative_0(spec) / std::numbers::pi;
  if (std::abs(v.imag()) > kZetaIntegerTolerance) {
    throw InvariantViolation("Euler characteristic from zeta has imaginary part " + format_double(v.imag()));
  }
  return detail::round_checked(v.real(), "Euler characteristic from zeta");
}

/// n(G) = -Im zeta'(0) / pi.
inline std::int64_t morse_index(const Spectrum& spec) {
  return detail::round_checked(-zeta_derivative_0(spec).imag() / std::numbers::pi, "Morse index from zeta");
}

/// (-1)^{n(G)} = exp(-zeta'(0)) when |det L| = 1.
inline int det_sign_from_zeta(const Spectrum& spec) {
  const Complex v = std::exp(-zeta_derivative_0(spec));
  return static_cast<int>(detail::round_checked(v.real(), "determinant from zeta"));
}

/// Exact zeta_{L^2}(m) = tr(L^{-2m}) for integer m.
inline BigInt zeta_L2_exact(const SimplicialComplex& g, int m) {
  const auto l = connection_laplacian(g);
  if (m <= 0) return trace_power(l * l, -m);
  const auto inv = unimodular_inverse(l);
  return trace_power(inv * inv, m);
}

struct FunctionalEquationResidual {
  double max_gap = 0.0;           // max_s |zeta_{L^2}(s) - zeta_{L^2}(-s)|
  double multiset_distance = 0.0;  // || sort(lambda^2) - sort(lambda^-2) ||_1
};

inline FunctionalEquationResidual functional_equation_residual(const Spectrum& spec,
                                                               const std::vector<Complex>& samples) {
  FunctionalEquationResidual r;
  for (const auto& s : samples) r.max_gap = std::max(r.max_gap, std::abs(zeta_L2(spec, s) - zeta_L2(spec, -s)));
  std::vector<double> sq, inv;
  for (double l : spec.eigenvalues) {
    sq.push_back(l * l);
    inv.push_back(1.0 / (l * l));
  }
  std::sort(sq.begin(), sq.end());
  std::sort(inv.begin(), inv.end());
  for (std::size_t i = 0; i < sq.size(); ++i) r.multiset_distance += std::abs(sq[i] - inv[i]);
  return r;
}

inline FunctionalEquationResidual functional_equation_residual(const SimplicialComplex& g,
                                                               const std::vector<Complex>& samples) {
  return functional_equation_residual(connection_spectrum(g), samples);
}

/// All products lambda_1 * ... * lambda_r, one factor from each spectrum.
inline Spectrum product_spectrum(const std::vector<Spectrum>& specs) {
  if (specs.empty()) throw InvalidInput("product of no spectra");
  std::vector<double> acc{1.0};
  for (const auto& s : specs) {
    std::vector<double> next;
    next.reserve(acc.size() * s.size());
    for (double a : acc)
      for (double b : s.eigenvalues) next.push_back(a * b);
    acc = std::move(next);
  }
  return Spectrum::from_values(std::move(acc), specs.front().tolerance);
}

/// prod_i zeta_{L_i^2}(s), the zeta_{L^2} of the product complex.
inline Complex product_zeta(const std::vector<Spectrum>& specs, Complex s) {
  if (specs.empty()) throw InvalidInput("product of no spectra");
  Complex z = 1;
  for (const auto& sp : specs) z *= zeta_L2(sp, s);
  return z;
}

}  // namespace conzeta
