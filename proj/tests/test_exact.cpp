// Complexes, integer operators, characteristic polynomials, minors and the deformation K(t).

#include <catch_amalgamated.hpp>

#include <sstream>

#include "conzeta/conzeta.hpp"

using namespace conzeta;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

IntegerMatrix random_matrix(Rng& rng, std::size_t n, int lo, int hi) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.between(lo, hi);
  return m;
}

}  // namespace

TEST_CASE("simplices are sorted and validated", "[complex]") {
  Simplex s{3, 1, 2};
  CHECK(s.front() == 1);
  CHECK(s.back() == 3);
  CHECK(s.dimension() == 2);
  CHECK_THROWS_AS(Simplex({1, 1}), InvalidInput);
  CHECK_THROWS_AS(Simplex({0, 2}), InvalidInput);
  CHECK_THROWS_AS(Simplex(std::vector<Vertex>{}), InvalidInput);
  CHECK(Simplex{1, 2}.intersects(Simplex{2, 5}));
  CHECK_FALSE(Simplex{1, 2}.intersects(Simplex{3, 4}));
  CHECK(Simplex{1, 3}.is_face_of(Simplex{1, 2, 3}));
}

TEST_CASE("closure of a triangle is K3", "[complex]") {
  const auto g = generate_closure(std::vector<std::vector<Vertex>>{{1, 2, 3}});
  CHECK(g.size() == 7);
  CHECK(g.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(euler_characteristic(g) == 1);
  CHECK(odd_simplex_count(g) == 3);
  CHECK(g == complete_complex(3));
  CHECK(g.str() == "{{1},{2},{3},{1,2},{1,3},{2,3},{1,2,3}}");
}

TEST_CASE("closure is idempotent on generated complexes", "[complex][property]") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto g = random_complex(8, 6, seed);
    CHECK(generate_closure(g.simplices()) == g);
  }
}

TEST_CASE("closure rejects oversized sets", "[complex]") {
  std::vector<Vertex> big_set;
  for (Vertex v = 1; v <= static_cast<Vertex>(kMaxClosureSetSize) + 1; ++v) big_set.push_back(v);
  CHECK_THROWS(generate_closure(std::vector<std::vector<Vertex>>{big_set}));
}

TEST_CASE("generators", "[complex]") {
  const auto c5 = circular_complex(5);
  CHECK(c5.f_vector() == std::vector<std::size_t>{5, 5});
  CHECK(euler_characteristic(c5) == 0);
  CHECK_THROWS_AS(circular_complex(2), InvalidInput);

  const auto fig8 = figure_eight();
  CHECK(fig8.f_vector() == std::vector<std::size_t>{7, 8});
  CHECK(euler_characteristic(fig8) == -1);

  const auto w = whitney_complex({{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  CHECK(w.f_vector() == std::vector<std::size_t>{4, 4, 1});

  const auto k3b = barycentric_refinement(complete_complex(3));
  CHECK(k3b.f_vector() == std::vector<std::size_t>{7, 12, 6});
  CHECK(euler_characteristic(k3b) == 1);

  const auto c4b = barycentric_refinement(circular_complex(4));
  CHECK(c4b.f_vector() == std::vector<std::size_t>{8, 8});

  CHECK(random_complex(10, 12, 7) == random_complex(10, 12, 7));
  const auto rg = random_graph_complex(6, 9, 3);
  CHECK(rg.f_vector() == std::vector<std::size_t>{6, 9});
}

TEST_CASE("barycentric refinement preserves Euler characteristic", "[complex][property]") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto g = random_complex(6, 4, seed);
    CHECK(euler_characteristic(barycentric_refinement(g)) == euler_characteristic(g));
  }
}

TEST_CASE("text format round trip and errors", "[io]") {
  const auto g = parse_complex("# a triangle with a tail\n1 2 3\n\n3 4\n");
  CHECK(g.f_vector() == std::vector<std::size_t>{4, 4, 1});
  CHECK(parse_complex(format_complex(g)) == g);

  try {
    parse_complex("1 2\n1 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_complex("1 -2\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("# nothing\n"), ParseError);
}

TEST_CASE("connection Laplacian of K3", "[operators]") {
  const auto l = connection_laplacian(complete_complex(3));
  CHECK(l.size() == 7);
  CHECK(l.is_symmetric());
  CHECK(l(0, 1) == 0);
  CHECK(l(0, 3) == 1);
  CHECK(l(3, 5) == 1);
  CHECK(bareiss_det(l) == -1);
  CHECK(laplace_det(l) == -1);
}

TEST_CASE("Green function is the exact inverse", "[operators][property]") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const auto g = random_complex(7, 5, seed);
    const auto l = connection_laplacian(g);
    const auto gi = green_matrix(g);
    CHECK(l * gi == IntegerMatrix::identity(l.size()));
    CHECK(sum_entries(gi) == euler_characteristic(g));
    CHECK(fredholm_det_sign(g) == (odd_simplex_count(g) % 2 ? -1 : 1));
  }
}

TEST_CASE("Bareiss agrees with Laplace expansion", "[operators][property]") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_matrix(rng, static_cast<std::size_t>(rng.between(1, 6)), -5, 5);
    CHECK(bareiss_det(m) == laplace_det(m));
  }
}

TEST_CASE("Bareiss falls back to big integers", "[operators]") {
  IntegerMatrix m(3);
  const BigInt big_entry = BigInt(1) << 40;
  m(0, 0) = big_entry;
  m(1, 1) = big_entry;
  m(2, 2) = big_entry;
  m(0, 1) = 1;
  CHECK(bareiss_det(m) == (BigInt(1) << 120));
}

TEST_CASE("unimodular inverse rejects other determinants", "[operators]") {
  IntegerMatrix m = IntegerMatrix::identity(2);
  m(0, 0) = 2;
  CHECK_THROWS_AS(unimodular_inverse(m), InvariantViolation);
}

TEST_CASE("Dirac and Hodge operators", "[operators]") {
  const auto g = circular_complex(4);
  const auto d = dirac_operator(g);
  CHECK(d.is_symmetric());
  const auto h = hodge_laplacian(g);
  CHECK(h == d * d);
  // Zero row sums on the vertex block for a graph Laplacian.
  for (std::size_t i = 0; i < 4; ++i) {
    BigInt row = 0;
    for (std::size_t j = 0; j < 4; ++j) row += h(i, j);
    CHECK(row == 0);
  }
  CHECK(h(0, 0) == 2);
}

TEST_CASE("exact zeta values as traces", "[operators]") {
  const auto k3 = complete_complex(3);
  const std::vector<long long> expected = {28063, 937, 37, 7, 25, 313, 5131};
  for (int m = -3; m <= 3; ++m) CHECK(zeta_L2_exact(k3, m) == expected[static_cast<std::size_t>(m + 3)]);
  CHECK(zeta_L2_exact(circular_complex(5), 2) == 480);
  CHECK(zeta_L2_exact(circular_complex(5), -3) == 7120);
}

TEST_CASE("Faddeev-LeVerrier against an independent oracle", "[charpoly]") {
  const auto k3 = connection_laplacian(complete_complex(3));
  CHECK(char_poly_coefficients(connection_laplacian(complete_complex(2))) == big({1, 3, 1, -1}));
  CHECK(char_poly_coefficients(IntegerMatrix::identity(4)) == big({1, 4, 6, 4, 1}));
  CHECK(char_poly_coefficients(k3) == big({1, 7, 6, -14, -8, 12, -1, -1}));
  CHECK(char_poly_coefficients(k3 * k3) == big({1, 37, 216, 462, 402, 156, 25, 1}));
  const auto c5 = connection_laplacian(circular_complex(5));
  CHECK(char_poly_coefficients(c5) == big({1, 10, 30, 10, -70, -36, 70, 10, -30, 10, -1}));
  CHECK(char_poly_coefficients(c5 * c5) == big({1, 40, 560, 3440, 9560, 13298, 9560, 3440, 560, 40, 1}));
  const auto tail = connection_laplacian(parse_complex("1 2 3\n3 4\n"));
  CHECK(char_poly_coefficients(tail * tail) == big({1, 49, 498, 1958, 3619, 3363, 1574, 354, 33, 1}));
}

TEST_CASE("p_k is the sum of principal minors", "[charpoly][property]") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 5));
    const auto m = random_matrix(rng, n, -3, 3);
    const auto p = char_poly_coefficients(m);
    for (std::size_t k = 0; k <= n; ++k) CHECK(p[k] == principal_minor_sum(m, k));
  }
}

TEST_CASE("standard characteristic polynomial", "[charpoly]") {
  IntegerMatrix m(2);
  m(0, 0) = 2;
  m(1, 1) = 3;
  // det(x - A) = x^2 - 5x + 6
  CHECK(standard_char_poly(char_poly_coefficients(m)) == int_poly({6, -5, 1}));
}

TEST_CASE("C4 palindrome and its quartic", "[charpoly]") {
  const auto l = connection_laplacian(circular_complex(4));
  const auto p = char_poly(l * l);
  CHECK(p.coefficients() == big({1, 32, 316, 1248, 1926, 1248, 316, 32, 1}));
  CHECK(is_palindromic(p));
  // The quartic belongs to the monic form det(x - L^2).
  const auto monic = standard_char_poly(p.coefficients());
  CHECK(monic == int_poly({1, -32, 316, -1248, 1926, -1248, 316, -32, 1}));
  const auto r = palindrome_reduce(monic);
  CHECK_FALSE(r.odd_factor);
  CHECK(r.q == int_poly({1296, -1152, 312, -32, 1}));
  CHECK(palindrome_reduce(int_poly({1, 2, 1})).q == int_poly({2, 1}));
}

TEST_CASE("palindrome reduction of odd degree", "[charpoly]") {
  // (1 + x)(1 + 3x + x^2) = 1 + 4x + 4x^2 + x^3
  const auto r = palindrome_reduce(int_poly({1, 4, 4, 1}));
  CHECK(r.odd_factor);
  CHECK(r.q == int_poly({3, 1}));
  CHECK_THROWS_AS(palindrome_reduce(int_poly({1, 2})), InvalidInput);
}

TEST_CASE("palindrome reduction reconstructs the polynomial", "[charpoly][property]") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto l = connection_laplacian(random_graph_complex(4, 4, seed));
    const auto p = char_poly(l * l);
    const auto r = palindrome_reduce(p);
    // Evaluate both sides at x = 2 using 2^m q(2 + 1/2) = 2^m q(5/2).
    const auto m = static_cast<int>((p.degree() - (r.odd_factor ? 1 : 0)) / 2);
    BigRational lhs = p.evaluate(BigRational(2));
    BigRational rhs = r.q.evaluate(BigRational(5, 2)) * BigRational(BigInt(1) << m);
    if (r.odd_factor) rhs *= 3;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("polynomial arithmetic", "[polynomial]") {
  const auto a = int_poly({1, 1});
  const auto b = int_poly({-1, 1});
  CHECK(a * b == int_poly({-1, 0, 1}));
  CHECK((a + b) == int_poly({0, 2}));
  CHECK((a - a).is_zero());
  CHECK(int_poly({0, 0, 1, 0, -1}).to_string("t") == "-t^4 + t^2");
  const auto [q, r] = divide_monic(int_poly({-1, 0, 1}), a);
  CHECK(q == b);
  CHECK(r.is_zero());
}

TEST_CASE("k-subsets in colex order", "[minors]") {
  const auto s = k_subsets(4, 2);
  REQUIRE(s.size() == 6);
  CHECK(s.front() == std::vector<std::size_t>{0, 1});
  CHECK(s[1] == std::vector<std::size_t>{0, 2});
  CHECK(s[2] == std::vector<std::size_t>{1, 2});
  CHECK(s.back() == std::vector<std::size_t>{2, 3});
  CHECK(binomial(10, 3) == 120);
  CHECK(k_subsets(3, 0).size() == 1);
}

TEST_CASE("pattern sums respect the budget", "[minors]") {
  const auto m = IntegerMatrix::identity(30);
  CHECK_THROWS_AS(pattern_sum(m, m, 15, 1000), ResourceLimit);
}

TEST_CASE("generalized Cauchy-Binet", "[minors][property]") {
  Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 4));
    const auto f = random_matrix(rng, n, -3, 3);
    const auto g = random_matrix(rng, n, -3, 3);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto r = cauchy_binet(f, g, k);
      CHECK(r.holds());
    }
    // k = 1 is the entrywise product sum.
    BigInt dot = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dot += f(i, j) * g(i, j);
    CHECK(cauchy_binet(f, g, 1).pattern_side == dot);
  }
}

TEST_CASE("minor sums of the 3x3 deformation", "[minors][deformation]") {
  const auto g = parse_complex("1\n2\n");
  const auto k = deformation_operator(g, 1, 2);
  REQUIRE(k.size() == 3);
  CHECK(minor_sum_squares(k, 1) == int_poly({3, 0, 4}));
  CHECK(minor_sum_squares(k, 2) == int_poly({3, 0, 0, 0, 4}));
  CHECK(minor_sum_squares(k, 3) == int_poly({1, 0, -4, 0, 4}));
  const auto p = faddeev_leverrier(k * k);
  CHECK(p[1] == int_poly({3, 0, 4}));
  CHECK(p[2] == int_poly({3, 0, 0, 0, 4}));
}

TEST_CASE("deformation endpoints", "[deformation]") {
  const auto g = parse_complex("1 2\n3\n");
  const auto k = deformation_operator(g, 2, 3);
  const auto at = [&](long v) {
    IntegerMatrix m(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
      for (std::size_t j = 0; j < k.size(); ++j) m(i, j) = k(i, j).evaluate(BigInt(v));
    return m;
  };
  CHECK(char_poly_coefficients(at(0) * at(0)) == big({1, 9, 22, 22, 9, 1}));
  CHECK(char_poly_coefficients(at(1) * at(1)) == big({1, 15, 49, 49, 15, 1}));
  CHECK(at(1) == connection_laplacian(parse_complex("1 2\n2 3\n")));
}

TEST_CASE("artillery coefficients of the worked example", "[deformation]") {
  const auto g = parse_complex("1 2\n3\n");
  const auto p = deformation_charpoly(g, 2, 3);
  REQUIRE(p.size() == 6);
  CHECK(p[1] == int_poly({9, 0, 6}));
  CHECK(p[5] == int_poly({1, 0, -4, 0, 4}));
  CHECK(artillery_delta(g, 2, 3) == big({4, 32, 28, -28, -32, -4}));
  CHECK(in_t_squared(p[2]) == int_poly({22, 18, 9}));
}

TEST_CASE("deformation rejects illegal edges", "[deformation]") {
  const auto g = parse_complex("1 2\n3\n");
  CHECK_THROWS_AS(deformation_operator(g, 1, 2), InvalidInput);
  CHECK_THROWS_AS(deformation_operator(g, 1, 1), InvalidInput);
  CHECK_THROWS_AS(deformation_operator(g, 1, 9), InvalidInput);
  CHECK_THROWS_AS(deformation_operator(complete_complex(3), 1, 2), InvalidInput);
}

TEST_CASE("artillery identity on random graphs", "[deformation][property]") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const auto g = random_graph_complex(5, 4, seed);
    Vertex a = 0, b = 0;
    REQUIRE(random_missing_edge(g, seed, a, b));
    const auto c = artillery_delta(g, a, b);
    for (std::size_t k = 0; k < c.size(); ++k) CHECK(c[k] == -c[c.size() - 1 - k]);
  }
}
