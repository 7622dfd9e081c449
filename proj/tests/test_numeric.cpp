// Eigenvalues, zeta functions, roots, quadrature, the limit function and manifests.

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "conzeta/conzeta.hpp"

using namespace conzeta;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("eigensolver on K3", "[eigen]") {
  const auto spec = connection_spectrum(complete_complex(3));
  const std::vector<double> expected = {-0.7525178219298168, -0.6180339887498949, -0.6180339887498949,
                                        0.2411131577030582,  1.6180339887498949,  1.6180339887498949,
                                        5.511404664226755};
  REQUIRE(spec.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK_THAT(spec.eigenvalues[i], WithinAbs(expected[i], 1e-12));
  CHECK(spec.negative == 3);
  CHECK(spec.positive == 4);
}

TEST_CASE("eigenvectors have small backward error", "[eigen][property]") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto a = connection_laplacian_real(random_complex(8, 6, seed));
    const auto e = symmetric_eigen(a);
    CHECK(backward_error(a, e) < 1e-12 * static_cast<double>(a.size()));
  }
}

TEST_CASE("eigensolver rejects asymmetric input", "[eigen]") {
  RealMatrix a(2);
  a(0, 1) = 1;
  CHECK_THROWS_AS(symmetric_eigen(a), InvalidInput);
}

TEST_CASE("C5 spectrum against an independent oracle", "[eigen]") {
  const auto spec = connection_spectrum(circular_complex(5));
  const std::vector<double> expected = {-0.8270909152852018, -0.8270909152852015, -0.3382612127177164,
                                        -0.3382612127177163, -0.23606797749978936, 1.2090569265353064,
                                        1.209056926535307,   2.9562952014676127,  2.956295201467613,
                                        4.23606797749979};
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK_THAT(spec.eigenvalues[i], WithinAbs(expected[i], 1e-12));
}

TEST_CASE("upper branch of the logarithm", "[zeta]") {
  CHECK(upper_log(-1.0) == Complex(0.0, std::numbers::pi));
  CHECK_THAT(upper_log(std::exp(2.0)).real(), WithinAbs(2.0, 1e-15));
}

TEST_CASE("K3 zeta values and Morse data", "[zeta]") {
  const auto spec = connection_spectrum(complete_complex(3));
  const std::vector<double> expected = {28063, 937, 37, 7, 25, 313, 5131};
  for (int m = -3; m <= 3; ++m) {
    const Complex v = zeta_L2(spec, static_cast<double>(m));
    CHECK_THAT(v.real(), WithinRel(expected[static_cast<std::size_t>(m + 3)], 1e-10));
    CHECK(std::abs(v.imag()) < 1e-9);
  }
  CHECK(euler_from_zeta(spec) == 1);
  CHECK(morse_index(spec) == 3);
  CHECK(det_sign_from_zeta(spec) == -1);
  CHECK_THAT(zeta_derivative_0(spec).imag(), WithinAbs(-3 * std::numbers::pi, 1e-10));
}

TEST_CASE("K2 closed forms", "[zeta]") {
  // sigma(L(K2)) = {1 - sqrt 2, 1, 1 + sqrt 2}
  const auto spec = connection_spectrum(complete_complex(2));
  REQUIRE(spec.size() == 3);
  CHECK_THAT(spec.eigenvalues[0], WithinAbs(1 - std::sqrt(2.0), 1e-14));
  CHECK_THAT(spec.eigenvalues[1], WithinAbs(1.0, 1e-14));
  CHECK_THAT(spec.eigenvalues[2], WithinAbs(1 + std::sqrt(2.0), 1e-14));
  CHECK(euler_from_zeta(spec) == 1);
  CHECK(morse_index(spec) == 1);
}

TEST_CASE("Euler characteristic from zeta on random complexes", "[zeta][property]") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_complex(8, 7, seed);
    const auto spec = connection_spectrum(g);
    CHECK(euler_from_zeta(spec) == euler_characteristic(g));
    CHECK(morse_index(spec) == static_cast<std::int64_t>(odd_simplex_count(g)));
    CHECK(det_sign_from_zeta(spec) == fredholm_det_sign(g));
  }
}

TEST_CASE("derivative matches a central difference", "[zeta]") {
  const auto spec = connection_spectrum(circular_complex(6));
  const Complex s(0.3, 1.7);
  const double h = 1e-6;
  const Complex fd = (zeta_L2(spec, s + h) - zeta_L2(spec, s - h)) / (2 * h);
  CHECK(std::abs(fd - zeta_L2_derivative(spec, s)) < 1e-6);
}

TEST_CASE("functional equation for 1-dimensional complexes", "[zeta][property]") {
  for (const auto& c : random_1d_corpus(15)) {
    const auto r = functional_equation_residual(c.complex, {{0.4, 2.0}, {-1.1, -3.0}});
    const auto n = static_cast<double>(c.complex.size());
    CHECK(r.multiset_distance < 1e-8 * n);
  }
}

TEST_CASE("functional equation fails in dimension 2", "[zeta]") {
  const auto r = functional_equation_residual(complete_complex(3), {{0.5, 1.0}});
  CHECK(r.multiset_distance > 1.0);
}

TEST_CASE("zeta of a disjoint union is the sum, of a product the product", "[zeta]") {
  const auto a = connection_spectrum(circular_complex(4));
  const auto b = connection_spectrum(complete_complex(2));
  const auto u = connection_spectrum(disjoint_union(circular_complex(4), complete_complex(2)));
  const Complex s(0.7, 2.5);
  CHECK(std::abs(zeta_L2(u, s) - zeta_L2(a, s) - zeta_L2(b, s)) < 1e-10);
  CHECK(std::abs(product_zeta({a, b}, s) - zeta_L2(product_spectrum({a, b}), s)) < 1e-9);
  CHECK(std::abs(product_zeta({a, b}, s) - zeta_L2(a, s) * zeta_L2(b, s)) < 1e-9);
}

TEST_CASE("Lidskii bound for an added edge", "[eigen]") {
  // Same simplex count: the circle against a path plus an isolated vertex.
  const auto a = connection_laplacian_real(circular_complex(6));
  const auto b = connection_laplacian_real(parse_complex("1 2\n2 3\n3 4\n4 5\n5 6\n7\n"));
  REQUIRE(a.size() == b.size());
  const auto r = lidskii_gap_bound(a, b);
  CHECK(r.distance <= r.bound);
}

TEST_CASE("root scan finds roots of a known exponential sum", "[roots]") {
  // 1 + 4^-s vanishes at s = i pi (2k+1) / log 4.
  ExponentialSum f({0.0, std::log(4.0)});
  const auto roots = root_scan(f, Rect{-1, 1, 0, 12}, Resolution{40, 240}, 1e-10);
  const double step = 2 * std::numbers::pi / std::log(4.0);
  REQUIRE(roots.roots.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(roots.roots[k].s - Complex(0, step * (static_cast<double>(k) + 0.5))) < 1e-10);
  }
  CHECK(roots.max_abs_real() < 1e-10);
}

TEST_CASE("grid and root writers", "[roots][io]") {
  const auto spec = connection_spectrum(circular_complex(4));
  const auto grid = zeta_grid(spec, Rect{-1, 1, 0, 2}, Resolution{3, 2});
  std::ostringstream csv;
  write_grid_csv(csv, grid);
  const auto text = csv.str();
  CHECK(text.rfind("x,y,abs_zeta\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  std::ostringstream js;
  write_root_json(js, Complex(0.5, 2.0), 1e-12);
  CHECK(js.str() == "{\"re\":0.5,\"im\":2,\"residual\":1e-12}\n");
  CHECK_THROWS_AS(Resolution({1, 5}).validate(), InvalidInput);
}

TEST_CASE("log Gamma", "[gamma]") {
  CHECK_THAT(gamma(Complex(5, 0)).real(), WithinRel(24.0, 1e-13));
  CHECK_THAT(gamma(Complex(0.5, 0)).real(), WithinRel(std::sqrt(std::numbers::pi), 1e-13));
  CHECK_THAT(gamma(Complex(-0.5, 0)).real(), WithinRel(-2 * std::sqrt(std::numbers::pi), 1e-13));
  // |Gamma(i y)|^2 = pi / (y sinh(pi y)); large y stays finite in log form.
  const double y = 300;
  const double expected = 0.5 * (std::log(std::numbers::pi / y) - std::numbers::pi * y + std::log(2.0));
  CHECK_THAT(log_gamma(Complex(0, y)).real(), WithinRel(expected, 1e-12));
  CHECK_THROWS_AS(log_gamma(Complex(-2, 0)), DomainError);
}

TEST_CASE("Gauss-Legendre rules", "[quadrature]") {
  const auto& r = gauss_legendre_cached(20);
  double sum = 0;
  for (double w : r.weights) sum += w;
  CHECK_THAT(sum, WithinAbs(2.0, 1e-14));
  CHECK_THAT(integrate_gl([](double x) { return std::exp(x); }, 0, 1, 20), WithinAbs(std::exp(1.0) - 1, 1e-14));
  CHECK_THAT(integrate_gl([](double x) { return std::pow(x, 39); }, 0, 1, 20), WithinAbs(1.0 / 40, 1e-15));
}

TEST_CASE("periodic trapezoid integrates trigonometric polynomials exactly", "[quadrature]") {
  const auto v = periodic_trapezoid<double>(
      [](std::size_t k, std::size_t n) {
        const double x = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        return std::cos(x) * std::cos(x);
      },
      16);
  CHECK_THAT(v, WithinAbs(0.5, 1e-15));
}

TEST_CASE("circular spectrum in closed form", "[limits]") {
  for (int n : {5, 6, 13, 26}) CHECK(circular_spectrum_gap(n) < 1e-9);
  CHECK(pullback_residual(26) < 1e-9);
  CHECK(circulant_check(6));
  CHECK(circulant_check(8));
  const auto [plus, minus] = split_eigenvalue<double>(4.0);
  CHECK_THAT(plus - 1 / plus, WithinAbs(4.0, 1e-14));
  CHECK_THAT(minus - 1 / minus, WithinAbs(4.0, 1e-14));
}

TEST_CASE("hydrogen spectrum matches the Hodge spectrum for even circles", "[limits]") {
  for (int n : {4, 6, 10}) {
    const auto g = circular_complex(n);
    const auto a = symmetric_eigenvalues(hydrogen_operator(g)).eigenvalues;
    const auto b = symmetric_eigenvalues(hodge_laplacian(g)).eigenvalues;
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK_THAT(a[i], WithinAbs(b[i], 1e-10));
  }
}

TEST_CASE("limit function values", "[limits]") {
  const auto e0 = limit_zeta(0.0);
  CHECK_THAT(e0.smooth_integral, WithinAbs(2.0, 1e-12));
  CHECK_THAT(limit_zeta(0.7).smooth_integral, WithinAbs(0.63973709348292185, 1e-12));
  CHECK_THAT(limit_zeta(3.3).smooth_integral, WithinAbs(-0.14850824139294969, 1e-12));
  CHECK_THAT(limit_zeta(9.9).smooth_integral, WithinAbs(-0.11277060502898133, 1e-12));
  for (double t : {0.0, 1.3, 5.5, 8.8}) CHECK(limit_zeta(t).spread < 1e-8);
}

TEST_CASE("limit function roots on the imaginary axis", "[limits]") {
  const std::vector<double> expected = {0.950045, 1.73662, 3.1548, 3.91082, 5.33455,
                                        6.08649,  7.51209, 8.26245, 9.68899};
  const auto roots = limit_roots(10.0);
  REQUIRE(roots.size() == expected.size());
  for (std::size_t i = 0; i < roots.size(); ++i) CHECK_THAT(roots[i], WithinAbs(expected[i], 1e-5));
}

TEST_CASE("complex limit agrees with the real form on the axis", "[limits]") {
  for (double t : {0.5, 2.0, 6.0}) {
    const Complex v = limit_zeta_at(Complex(0, t));
    CHECK_THAT(v.real(), WithinAbs(limit_zeta(t).smooth_integral, 1e-12));
    CHECK(std::abs(v.imag()) < 1e-12);
  }
}

TEST_CASE("Riemann sums approach the limit", "[limits]") {
  const Complex s(0.0, 1.5);
  const double e32 = riemann_sum_error(32, s).error;
  const double e64 = riemann_sum_error(64, s).error;
  CHECK(e64 < e32);
  CHECK_THROWS_AS(riemann_sum_error(4, s), InvalidInput);
}

TEST_CASE("decay fits", "[limits]") {
  const std::vector<double> ns = {10, 20, 40};
  CHECK_THAT(fit_power_decay(ns, {1e-2, 2.5e-3, 6.25e-4}), WithinAbs(2.0, 1e-12));
  CHECK_THAT(fit_exponential_decay({1, 2, 3}, {std::exp(-0.5), std::exp(-1.0), std::exp(-1.5)}),
             WithinAbs(0.5, 1e-12));
}

TEST_CASE("Hodge limit zeta", "[limits]") {
  CHECK_THAT(hodge_limit_g(0.0).real(), WithinAbs(4.0, 1e-13));
  // g(s) = 4^{1 - s/2} zeta_Z(-s/2)
  const Complex s(0.3, 0.8);
  CHECK(std::abs(hodge_limit_g(s) - std::pow(4.0, 1.0 - s / 2.0) * hodge_zeta_limit(-s / 2.0)) < 1e-12);
}

TEST_CASE("Friedli-Karlsson probe against an mpmath oracle", "[limits]") {
  const Complex h = friedli_karlsson_h(1000, Complex(0.3, 12.5));
  CHECK_THAT(h.real(), WithinRel(-0.00013376745585, 1e-6));
  CHECK_THAT(h.imag(), WithinRel(3.40650873237e-5, 1e-6));
  const auto ratio = [](Complex s) {
    return std::abs(friedli_karlsson_h(1000, 1.0 - s) / friedli_karlsson_h(1000, s));
  };
  CHECK_THAT(ratio({0.3, 12.5}), WithinRel(1.00000799319638, 1e-6));
  CHECK_THAT(ratio({0.134, 338.97}), WithinRel(0.595598664572727, 1e-4));
}

TEST_CASE("Friedli-Karlsson ratio tends to one as n grows", "[limits][property]") {
  const Complex s(0.597, 307.76);
  double prev = 1.0;
  for (int n : {1000, 4000, 16000}) {
    const double gap = std::abs(std::abs(friedli_karlsson_h(n, 1.0 - s) / friedli_karlsson_h(n, s)) - 1.0);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("Abelian integrand log derivative", "[limits]") {
  for (double z : {1.2, 2.0, 3.5}) CHECK(abelian_log_derivative_residual(z, Complex(0.2, 1.1)) < 1e-6);
}

TEST_CASE("manifest parsing and execution inputs", "[io]") {
  const auto j = nlohmann::json::parse(R"({"command": "roots", "input": {"kind": "circular", "n": 8},
      "rect": [-1, 1, 0, 10], "resolution": [50, 100], "tolerance": 1e-9})");
  const auto m = parse_manifest(j);
  CHECK(m.command == "roots");
  CHECK(build_complex(m.input) == circular_complex(8));
  CHECK(m.rect.y_max == 10);
  CHECK(m.resolution.ny == 100);
  CHECK(m.tolerance == 1e-9);
  CHECK_THROWS_AS(parse_manifest(nlohmann::json::parse(R"({"input": {}})")), InvalidInput);
  CHECK_THROWS_AS(parse_manifest(nlohmann::json::parse(R"({"command": "x", "rect": [1, 2]})")), InvalidInput);
  CHECK_THROWS_AS(build_complex(GeneratorSpec{"torus", 3, 0, 0, 0, ""}), InvalidInput);
}

TEST_CASE("verification suite passes on the default corpus", "[verify]") {
  const auto corpus = default_corpus();
  CHECK(corpus.size() == 30);
  const auto rep = run_verify(corpus);
  std::ostringstream out;
  rep.write(out);
  INFO(out.str());
  CHECK(rep.all_passed());
}
