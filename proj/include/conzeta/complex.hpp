#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "conzeta/error.hpp"

namespace conzeta {

using Vertex = std::int32_t;

/// A nonempty finite set of positive vertex identifiers, stored sorted.
class Simplex {
 public:
  explicit Simplex(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw InvalidInput("simplex must be nonempty");
    std::sort(v_.begin(), v_.end());
    if (v_.front() <= 0) throw InvalidInput("vertex identifiers must be positive");
    if (std::adjacent_find(v_.begin(), v_.end()) != v_.end()) {
      throw InvalidInput("simplex has a repeated vertex");
    }
  }
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  std::span<const Vertex> vertices() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  int dimension() const noexcept { return static_cast<int>(v_.size()) - 1; }
  Vertex front() const noexcept { return v_.front(); }
  Vertex back() const noexcept { return v_.back(); }
  Vertex operator[](std::size_t i) const noexcept { return v_[i]; }

  bool contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }

  bool intersects(const Simplex& other) const {
    auto a = v_.begin();
    auto b = other.v_.begin();
    while (a != v_.end() && b != other.v_.end()) {
      if (*a == *b) return true;
      if (*a < *b) ++a; else ++b;
    }
    return false;
  }

  /// True if every vertex of this simplex is a vertex of `other`.
  bool is_face_of(const Simplex& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }

  /// The facet obtained by deleting the vertex at sorted position `k`.
  Simplex without(std::size_t k) const {
    std::vector<Vertex> w;
    w.reserve(v_.size() - 1);
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i != k) w.push_back(v_[i]);
    }
    return Simplex(std::move(w));
  }

  // Canonical order: by cardinality, then lexicographic.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (a.v_.size() != b.v_.size()) return a.v_.size() <=> b.v_.size();
    for (std::size_t i = 0; i < a.v_.size(); ++i) {
      if (a.v_[i] != b.v_[i]) return a.v_[i] <=> b.v_[i];
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Simplex& a, const Simplex& b) { return a.v_ == b.v_; }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<Vertex> v_;
};

/// A finite abstract simplicial complex in canonical simplex order.
///
/// Instances are immutable and always closed under taking nonempty subsets;
/// the only ways to obtain one are generate_closure() and the generators
/// built on it.
class SimplicialComplex {
 public:
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  std::size_t size() const noexcept { return simplices_.size(); }
  const Simplex& operator[](std::size_t i) const noexcept { return simplices_[i]; }
  auto begin() const noexcept { return simplices_.begin(); }
  auto end() const noexcept { return simplices_.end(); }

  /// Number of simplices per dimension; entry d counts d-dimensional simplices.
  const std::vector<std::size_t>& f_vector() const noexcept { return f_; }
  std::size_t vertex_count() const noexcept { return f_.empty() ? 0 : f_[0]; }
  int dimension() const noexcept { return static_cast<int>(f_.size()) - 1; }

  /// Vertex identifiers (the 0-simplices), ascending.
  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(simplices_[i].front());
    return out;
  }

  /// Position of `s` in canonical order, or size() if absent.
  std::size_t index_of(const Simplex& s) const {
    auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s);
    if (it != simplices_.end() && *it == s) return static_cast<std::size_t>(it - simplices_.begin());
    return simplices_.size();
  }
  bool contains(const Simplex& s) const { return index_of(s) != simplices_.size(); }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.simplices_ == b.simplices_;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < simplices_.size(); ++i) {
      if (i) s += ",";
      s += simplices_[i].str();
    }
    return s + "}";
  }

  /// Wraps a list that is already sorted, duplicate-free and closed.
  static SimplicialComplex from_canonical(std::vector<Simplex> simplices) {
    SimplicialComplex g;
    g.simplices_ = std::move(simplices);
    for (const auto& x : g.simplices_) {
      const auto d = static_cast<std::size_t>(x.dimension());
      if (g.f_.size() <= d) g.f_.resize(d + 1, 0);
      ++g.f_[d];
    }
    return g;
  }

 private:
  SimplicialComplex() = default;

  std::vector<Simplex> simplices_;
  std::vector<std::size_t> f_;
};

/// Largest vertex set accepted by generate_closure (2^24 subsets).
inline constexpr std::size_t kMaxClosureSetSize = 24;

/// Smallest simplicial complex containing every input set.
inline SimplicialComplex generate_closure(const std::vector<std::vector<Vertex>>& sets) {
  if (sets.empty()) throw InvalidInput("closure of an empty family");
  std::vector<Simplex> out;
  for (const auto& raw : sets) {
    if (raw.empty()) throw InvalidInput("empty set in closure input");
    std::vector<Vertex> set = raw;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.front() <= 0) throw InvalidInput("vertex identifiers must be positive");
    if (set.size() > kMaxClosureSetSize) {
      throw ResourceLimit("closure of a large simplex", std::size_t{1} << set.size());
    }
    const std::uint32_t full = (std::uint32_t{1} << set.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) sub.push_back(set[i]);
      }
      out.emplace_back(std::move(sub));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SimplicialComplex::from_canonical(std::move(out));
}

inline SimplicialComplex generate_closure(const std::vector<Simplex>& simplices) {
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(simplices.size());
  for (const auto& s : simplices) sets.emplace_back(s.vertices().begin(), s.vertices().end());
  return generate_closure(sets);
}

inline std::vector<std::size_t> f_vector(const SimplicialComplex& g) { return g.f_vector(); }

inline int dimension(const SimplicialComplex& g) { return g.dimension(); }

/// Sum over simplices of (-1)^dim.
inline std::int64_t euler_characteristic(const SimplicialComplex& g) {
  std::int64_t chi = 0;
  const auto& f = g.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
  }
  return chi;
}

inline std::size_t odd_simplex_count(const SimplicialComplex& g) {
  std::size_t n = 0;
  const auto& f = g.f_vector();
  for (std::size_t d = 1; d < f.size(); d += 2) n += f[d];
  return n;
}

/// Simplices of dimension at most `d`.
inline SimplicialComplex skeleton(const SimplicialComplex& g, int d) {
  if (d < 0) throw InvalidInput("skeleton dimension must be nonnegative");
  std::vector<Simplex> keep;
  for (const auto& x : g) {
    if (x.dimension() <= d) keep.push_back(x);
  }
  return SimplicialComplex::from_canonical(std::move(keep));
}

}  // namespace conzeta
