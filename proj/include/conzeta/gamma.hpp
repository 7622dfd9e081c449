#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "conzeta/error.hpp"
#include "conzeta/numeric.hpp"

namespace conzeta {

inline constexpr double kPoleTolerance = 1e-8;

namespace detail {

// Lanczos approximation, g = 7, n = 9.
inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log(sin(pi z)) up to a multiple of 2 pi i, without overflow for large |Im z|.
inline Complex log_sin_pi(Complex z) {
  using namespace std::complex_literals;
  const double pi = std::numbers::pi;
  if (z.imag() == 0.0) return std::log(Complex(std::sin(pi * z.real()), 0.0));
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = exp(-i pi z) (1 - exp(2 i pi z)) (i / 2), and |exp(2 i pi z)| < 1 here.
  return -1i * pi * z + std::log(1.0 - std::exp(2i * pi * z)) + std::log(0.5i);
}

}  // namespace detail

/// log Gamma(z) up to a multiple of 2 pi i; exp() of it is Gamma(z).
inline Complex log_gamma(Complex z) {
  const double pi = std::numbers::pi;
  if (z.real() < 0.5) {
    const double k = std::round(z.real());
    if (k <= 0.0 && std::abs(z - Complex(k, 0.0)) < kPoleTolerance) {
      throw DomainError("Gamma pole at " + format_double(k));
    }
    // Reflection: Gamma(z) Gamma(1 - z) = pi / sin(pi z).
    return std::log(pi) - detail::log_sin_pi(z) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  Complex x = detail::kLanczos[0];
  for (std::size_t i = 1; i < detail::kLanczos.size(); ++i) x += detail::kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + detail::kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

}  // namespace conzeta
