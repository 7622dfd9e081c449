#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conzeta/charpoly.hpp"
#include "conzeta/complex.hpp"
#include "conzeta/operators.hpp"
#include "conzeta/polynomial.hpp"

namespace conzeta {

using TMatrix = Matrix<TPolynomial>;

namespace detail {

inline void check_new_edge(const SimplicialComplex& g, Vertex a, Vertex b) {
  if (g.dimension() > 1) throw InvalidInput("deformation needs a complex of dimension at most 1");
  if (a == b) throw InvalidInput("new edge needs two distinct vertices");
  if (!g.contains(Simplex{a}) || !g.contains(Simplex{b})) {
    throw InvalidInput("new edge endpoint is not a vertex of the complex");
  }
  if (g.contains(Simplex{a, b})) throw InvalidInput("edge is already in the complex");
}

}  // namespace detail

/// K(t): the connection Laplacian of g bordered by one row and column for the
/// new edge x = {a,b}. Border entries are t where a simplex meets x, the
/// corner is 1. K(0) = L + [1] and K(1) is the connection Laplacian of g + x.
inline TMatrix deformation_operator(const SimplicialComplex& g, Vertex a, Vertex b) {
  detail::check_new_edge(g, a, b);
  const auto n = g.size();
  const auto l = connection_laplacian(g);
  const TPolynomial t = int_poly({0, 1});
  const Simplex x{a, b};
  TMatrix k(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) k(i, j) = TPolynomial::constant(l(i, j));
    if (g[i].intersects(x)) k(i, n) = k(n, i) = t;
  }
  k(n, n) = TPolynomial(1);
  return k;
}

/// Coefficients p_0(t)..p_N(t) of the characteristic polynomial of K(t)^2.
///
/// Checks on the way that every p_k(t) is even in t of degree at most 4 and
/// that det K(t) = det L (1 - 2t^2).
inline std::vector<TPolynomial> deformation_charpoly(const SimplicialComplex& g, Vertex a, Vertex b) {
  const auto k = deformation_operator(g, a, b);
  const auto p = faddeev_leverrier(k * k);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p[i].coefficients();
    if (p[i].degree() > 4) {
      throw InvariantViolation("p_" + std::to_string(i) + "(t) has degree above 4: " + p[i].to_string("t"));
    }
    for (std::size_t d = 1; d < c.size(); d += 2) {
      if (c[d] != 0) throw InvariantViolation("p_" + std::to_string(i) + "(t) has odd powers: " + p[i].to_string("t"));
    }
  }
  const auto pk = faddeev_leverrier(k);
  const auto det_l = bareiss_det(connection_laplacian(g));
  const auto expected = int_poly({1, 0, -2}) * det_l;
  if (!(pk.back() == expected)) {
    throw InvariantViolation("det K(t) = " + pk.back().to_string("t") + ", expected " + expected.to_string("t"));
  }
  return p;
}

/// Reads an even polynomial in t as a polynomial in t^2. This is the form the
/// coefficients take for the deformation parametrised by sqrt(t).
inline TPolynomial in_t_squared(const TPolynomial& p) {
  const auto& c = p.coefficients();
  std::vector<BigInt> out;
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (d % 2 == 1) {
      if (c[d] != 0) throw InvalidInput("polynomial is not even in t");
      continue;
    }
    out.push_back(c[d]);
  }
  return TPolynomial(std::move(out));
}

/// Palindrome defects delta_k = p_k - p_{N-k} of K(t)^2, each checked to be
/// C_k t^2 (1 - t^2). Returns C_0..C_N.
inline std::vector<BigInt> artillery_delta(const SimplicialComplex& g, Vertex a, Vertex b) {
  const auto p = deformation_charpoly(g, a, b);
  const auto n = p.size() - 1;
  const TPolynomial shape = int_poly({0, 0, 1, 0, -1});
  std::vector<BigInt> out;
  for (std::size_t k = 0; k <= n; ++k) {
    const auto delta = p[k] - p[n - k];
    const BigInt c = delta[2];
    if (!(delta == shape * c)) {
      throw InvariantViolation("delta_" + std::to_string(k) + "(t) = " + delta.to_string("t") +
                               " is not a multiple of t^2(1 - t^2)");
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace conzeta
