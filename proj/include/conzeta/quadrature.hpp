#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

#include "conzeta/error.hpp"

namespace conzeta {

struct GaussLegendreRule {
  std::vector<double> nodes;    // in (-1, 1), ascending
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on P_n.
inline GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw InvalidInput("Gauss-Legendre needs at least one node");
  GaussLegendreRule r{std::vector<double>(n), std::vector<double>(n)};
  const double pi = std::numbers::pi;
  const auto nd = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const auto kd = static_cast<double>(k);
        const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
        p0 = p1;
        p1 = p2;
      }
      dp = nd * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 4e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const auto kd = static_cast<double>(k);
      const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
      p0 = p1;
      p1 = p2;
    }
    dp = nd * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = r.weights[n - 1 - i] = w;
  }
  return r;
}

/// Cached rules; computing a 2^16 point rule is not free.
inline const GaussLegendreRule& gauss_legendre_cached(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
  return it->second;
}

/// Integral of f over [a, b] with an n-point Gauss-Legendre rule.
template <class F>
double integrate_gl(F&& f, double a, double b, std::size_t n) {
  const auto& r = gauss_legendre_cached(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  double s = 0;
  for (std::size_t i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return half * s;
}

/// Mean of f over one period [0, 1) sampled at k/n: the periodic trapezoid rule.
template <class Real, class F>
Real periodic_trapezoid(F&& f, std::size_t n) {
  Real s(0);
  for (std::size_t k = 0; k < n; ++k) s += f(k, n);
  return s / Real(n);
}

}  // namespace conzeta
