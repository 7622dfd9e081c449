#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "conzeta/charpoly.hpp"
#include "conzeta/corpus.hpp"
#include "conzeta/deformation.hpp"
#include "conzeta/limits.hpp"
#include "conzeta/minors.hpp"
#include "conzeta/operators.hpp"
#include "conzeta/zeta.hpp"

namespace conzeta {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0;   // worst measured value
  double tolerance = 0;
  double elapsed_ms = 0;
  std::string detail;    // first failure, if any
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }

  void write(std::ostream& out) const {
    for (const auto& c : checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name << " residual=" << format_double(c.residual)
          << " tol=" << format_double(c.tolerance) << " ms=" << format_double(std::round(c.elapsed_ms * 10) / 10);
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << '\n';
    }
  }
};

namespace detail {

// Runs `body`, which returns the worst residual and may set a detail string.
// Exceptions count as failures.
inline CheckResult run_check(const std::string& name, double tol,
                             const std::function<double(std::string&)>& body) {
  CheckResult r;
  r.name = name;
  r.tolerance = tol;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.residual = body(r.detail);
    r.passed = r.residual <= tol && r.detail.empty();
  } catch (const std::exception& e) {
    r.passed = false;
    r.residual = INFINITY;
    r.detail = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void note(std::string& detail, const std::string& what) {
  if (detail.empty()) detail = what;
}

}  // namespace detail

/// Runs every check of the suite once over the given corpus.
inline VerifyReport run_verify(const std::vector<NamedComplex>& corpus) {
  using detail::note;
  using detail::run_check;
  VerifyReport rep;
  std::vector<const NamedComplex*> one_d;
  for (const auto& c : corpus)
    if (c.complex.dimension() <= 1) one_d.push_back(&c);

  rep.checks.push_back(run_check("closure-idempotence", 0, [&](std::string& d) {
    for (const auto& c : corpus) {
      if (!(generate_closure(c.complex.simplices()) == c.complex)) note(d, c.name);
    }
    return d.empty() ? 0.0 : 1.0;
  }));

  rep.checks.push_back(run_check("unimodularity", 0, [&](std::string& d) {
    for (const auto& c : corpus) {
      const int expected = odd_simplex_count(c.complex) % 2 ? -1 : 1;
      if (fredholm_det_sign(c.complex) != expected) note(d, c.name);
    }
    return d.empty() ? 0.0 : 1.0;
  }));

  rep.checks.push_back(run_check("energy-equals-euler", 0, [&](std::string& d) {
    double worst = 0;
    for (const auto& c : corpus) {
      const auto gap = std::abs(static_cast<double>(total_energy(c.complex) - euler_characteristic(c.complex)));
      if (gap > 0) note(d, c.name);
      worst = std::max(worst, gap);
    }
    return worst;
  }));

  rep.checks.push_back(run_check("euler-from-zeta", kZetaIntegerTolerance, [&](std::string& d) {
    double worst = 0;
    for (const auto& c : corpus) {
      const auto spec = connection_spectrum(c.complex);
      const Complex v = zeta_L(spec, 0.0) - Complex(0, 2) * zeta_derivative_0(spec) / std::numbers::pi;
      const auto chi = euler_characteristic(c.complex);
      worst = std::max({worst, std::abs(v - Complex(static_cast<double>(chi), 0))});
      if (euler_from_zeta(spec) != chi) note(d, c.name);
      if (static_cast<std::int64_t>(spec.positive) - static_cast<std::int64_t>(spec.negative) != chi) {
        note(d, c.name + ": p - n != chi");
      }
    }
    return worst;
  }));

  rep.checks.push_back(run_check("morse-index", kZetaIntegerTolerance, [&](std::string& d) {
    double worst = 0;
    for (const auto& c : corpus) {
      const auto spec = connection_spectrum(c.complex);
      const auto odd = static_cast<double>(odd_simplex_count(c.complex));
      worst = std::max(worst, std::abs(-zeta_derivative_0(spec).imag() / std::numbers::pi - odd));
      if (morse_index(spec) != static_cast<std::int64_t>(odd)) note(d, c.name);
      if (det_sign_from_zeta(spec) != fredholm_det_sign(c.complex)) note(d, c.name + ": det sign");
    }
    return worst;
  }));

  rep.checks.push_back(run_check("functional-equation", 1e-8, [&](std::string& d) {
    double worst = 0;
    const std::vector<Complex> samples = {{0.5, 1.0}, {-1.3, 7.0}, {2.0, -3.5}};
    for (const auto* c : one_d) {
      const auto spec = connection_spectrum(c->complex);
      const auto r = functional_equation_residual(spec, samples);
      const double n = static_cast<double>(spec.size());
      const double scale = std::max(1.0, std::abs(zeta_L2(spec, 2.0)));
      worst = std::max({worst, r.multiset_distance / n, r.max_gap / scale / n});
    }
    (void)d;
    return worst;
  }));

  rep.checks.push_back(run_check("palindrome", 0, [&](std::string& d) {
    for (const auto* c : one_d) {
      const auto l = connection_laplacian(c->complex);
      if (c->complex.size() <= 40 && !is_palindromic(char_poly_coefficients(l * l))) note(d, c->name);
    }
    return d.empty() ? 0.0 : 1.0;
  }));

  rep.checks.push_back(run_check("cauchy-binet", 0, [&](std::string& d) {
    Rng rng(kCorpusSeed);
    for (int trial = 0; trial < 20; ++trial) {
      const auto n = static_cast<std::size_t>(rng.between(1, 4));
      IntegerMatrix f(n), g(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          f(i, j) = rng.between(-3, 3);
          g(i, j) = rng.between(-3, 3);
        }
      for (std::size_t k = 0; k <= n; ++k)
        if (!cauchy_binet_check(f, g, k)) note(d, "trial " + std::to_string(trial));
    }
    return d.empty() ? 0.0 : 1.0;
  }));

  rep.checks.push_back(run_check("artillery-identity", 0, [&](std::string& d) {
    std::uint64_t seed = kCorpusSeed;
    for (const auto* c : one_d) {
      Vertex a = 0, b = 0;
      if (c->complex.size() > 40 || !random_missing_edge(c->complex, seed++, a, b)) continue;
      try {
        artillery_delta(c->complex, a, b);
      } catch (const InvariantViolation& e) {
        note(d, c->name + ": " + e.what());
      }
    }
    return d.empty() ? 0.0 : 1.0;
  }));

  rep.checks.push_back(run_check("circular-explicit-spectrum", 1e-8, [&](std::string&) {
    return std::max({circular_spectrum_gap(13), circular_spectrum_gap(26), pullback_residual(26)});
  }));

  rep.checks.push_back(run_check("limit-form-agreement", 1e-8, [&](std::string& d) {
    double worst = 0;
    for (double t : {0.0, 0.7, 3.3, 6.1, 9.9}) worst = std::max(worst, limit_zeta(t).spread);
    if (std::abs(limit_zeta(0.0).smooth_integral - 2.0) > 1e-12) note(d, "z(0) != 2");
    return worst;
  }));

  return rep;
}

}  // namespace conzeta
