#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "conzeta/charpoly.hpp"
#include "conzeta/matrix.hpp"

namespace conzeta {

/// Default cap on the number of (I, J) patterns a minor sum may visit.
inline constexpr std::size_t kMinorPatternBudget = 4'000'000;

/// All k-subsets of {0..n-1} as sorted index lists, in colex order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n || n >= 64) return out;
  if (k == 0) return {{}};
  std::uint64_t s = (std::uint64_t{1} << k) - 1;
  const std::uint64_t end = std::uint64_t{1} << n;
  while (s < end) {
    std::vector<std::size_t> idx;
    for (std::uint64_t t = s; t; t &= t - 1) idx.push_back(static_cast<std::size_t>(std::countr_zero(t)));
    out.push_back(std::move(idx));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Determinant without division, by Laplace expansion over column subsets.
/// Works over any commutative ring; cost O(2^n n).
template <class R>
R laplace_det(const Matrix<R>& a) {
  const auto n = a.size();
  if (n == 0) return R(1);
  if (n > 20) throw ResourceLimit("Laplace determinant", std::size_t{1} << n);
  std::vector<R> dp(std::size_t{1} << n, R(0));
  dp[0] = R(1);
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto r = static_cast<std::size_t>(std::popcount(mask)) - 1;  // row being expanded
    R acc(0);
    std::size_t pos = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::uint32_t{1} << j))) continue;
      const R& e = a(r, j);
      if (!(e == R(0))) {
        const R term = e * dp[mask & ~(std::uint32_t{1} << j)];
        if ((r + pos) % 2 == 0) acc += term; else acc -= term;
      }
      ++pos;
    }
    dp[mask] = acc;
  }
  return dp.back();
}

/// Sum over patterns I x J with |I| = |J| = k of det(F_IJ) det(G_IJ).
template <class R>
R pattern_sum(const Matrix<R>& f, const Matrix<R>& g, std::size_t k,
              std::size_t budget = kMinorPatternBudget) {
  if (f.size() != g.size()) throw InvalidInput("pattern sum needs equal sizes");
  const auto n = f.size();
  if (k > n) throw InvalidInput("minor order exceeds matrix size");
  const auto c = binomial(n, k);
  if (c != 0 && c > budget / c) throw ResourceLimit("minor pattern enumeration", c * c);
  const auto subsets = k_subsets(n, k);
  R sum(0);
  for (const auto& i : subsets) {
    for (const auto& j : subsets) {
      const R a = laplace_det(f.submatrix(i, j));
      if (a == R(0)) continue;
      sum += a * laplace_det(g.submatrix(i, j));
    }
  }
  return sum;
}

/// Sum of the k x k principal minors, which is p_k(A).
template <class R>
R principal_minor_sum(const Matrix<R>& a, std::size_t k, std::size_t budget = kMinorPatternBudget) {
  if (k > a.size()) throw InvalidInput("minor order exceeds matrix size");
  const auto c = binomial(a.size(), k);
  if (c > budget) throw ResourceLimit("principal minor enumeration", c);
  R sum(0);
  for (const auto& i : k_subsets(a.size(), k)) sum += laplace_det(a.submatrix(i, i));
  return sum;
}

/// sum_{I,J} det(A_IJ) det((A^T)_IJ), which equals p_k(A^2).
template <class R>
R minor_sum_squares(const Matrix<R>& a, std::size_t k, std::size_t budget = kMinorPatternBudget) {
  return pattern_sum(a.transpose(), a, k, budget);
}

struct CauchyBinetResult {
  BigInt charpoly_side;  // p_k(F^T G)
  BigInt pattern_side;   // sum_P det(F_P) det(G_P)
  bool holds() const { return charpoly_side == pattern_side; }
};

inline CauchyBinetResult cauchy_binet(const IntegerMatrix& f, const IntegerMatrix& g, std::size_t k) {
  if (f.size() != g.size()) throw InvalidInput("Cauchy-Binet needs equal sizes");
  if (k > f.size()) throw InvalidInput("minor order exceeds matrix size");
  const auto p = faddeev_leverrier(f.transpose() * g);
  return {p[k], pattern_sum(f, g, k)};
}

inline bool cauchy_binet_check(const IntegerMatrix& f, const IntegerMatrix& g, std::size_t k) {
  return cauchy_binet(f, g, k).holds();
}

}  // namespace conzeta
