#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "conzeta/complex.hpp"
#include "conzeta/rng.hpp"

namespace conzeta {

using Edge = std::pair<Vertex, Vertex>;

/// The cycle graph C_n as a 1-dimensional complex (n vertices, n edges).
inline SimplicialComplex circular_complex(int n) {
  if (n < 3) throw InvalidInput("circular complex needs n >= 3");
  std::vector<std::vector<Vertex>> sets;
  for (Vertex k = 1; k <= n; ++k) sets.push_back({k, k % n + 1});
  return generate_closure(sets);
}

/// The full simplex on n vertices, 2^n - 1 simplices.
inline SimplicialComplex complete_complex(int n) {
  if (n < 1) throw InvalidInput("complete complex needs n >= 1");
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return generate_closure(std::vector<std::vector<Vertex>>{all});
}

/// Clique (Whitney) complex of a simple graph.
///
/// Vertices 1..vertex_count are always included, plus every endpoint of an
/// edge; pass vertex_count = 0 to take only the edge endpoints.
inline SimplicialComplex whitney_complex(const std::vector<Edge>& edges, int vertex_count = 0) {
  Vertex top = vertex_count;
  for (auto [a, b] : edges) {
    if (a <= 0 || b <= 0) throw InvalidInput("vertex identifiers must be positive");
    if (a == b) throw InvalidInput("self-loop in edge list");
    top = std::max({top, a, b});
  }
  if (top == 0) throw InvalidInput("whitney complex of an empty graph");
  const auto n = static_cast<std::size_t>(top) + 1;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<char> present(n, 0);
  for (int v = 1; v <= vertex_count; ++v) present[static_cast<std::size_t>(v)] = 1;
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
    present[static_cast<std::size_t>(a)] = present[static_cast<std::size_t>(b)] = 1;
  }

  // Grow cliques one vertex at a time, always appending a larger vertex, so
  // each clique is produced exactly once.
  std::vector<std::vector<Vertex>> level;
  for (Vertex v = 1; v <= top; ++v) {
    if (present[static_cast<std::size_t>(v)]) level.push_back({v});
  }
  std::vector<Simplex> out;
  while (!level.empty()) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& c : level) {
      out.emplace_back(c);
      for (Vertex w = c.back() + 1; w <= top; ++w) {
        bool ok = present[static_cast<std::size_t>(w)];
        for (std::size_t i = 0; ok && i < c.size(); ++i) {
          ok = adj[static_cast<std::size_t>(c[i])][static_cast<std::size_t>(w)];
        }
        if (ok) {
          auto d = c;
          d.push_back(w);
          next.push_back(std::move(d));
        }
      }
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return SimplicialComplex::from_canonical(std::move(out));
}

/// Barycentric refinement: vertices are the simplices of g (relabelled 1..N
/// in canonical order), edges are strict inclusions, and the result is the
/// Whitney complex of that graph.
inline SimplicialComplex barycentric_refinement(const SimplicialComplex& g) {
  std::vector<Edge> edges;
  const auto n = g.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Canonical order puts smaller simplices first, so only i ⊂ j is possible.
      if (g[i].size() < g[j].size() && g[i].is_face_of(g[j])) {
        edges.emplace_back(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
      }
    }
  }
  return whitney_complex(edges, static_cast<int>(n));
}

/// Vertex-disjoint union; vertices of h are shifted past the largest vertex of g.
inline SimplicialComplex disjoint_union(const SimplicialComplex& g, const SimplicialComplex& h) {
  Vertex shift = 0;
  for (const auto& x : g) shift = std::max(shift, x.back());
  std::vector<Simplex> all(g.begin(), g.end());
  for (const auto& y : h) {
    std::vector<Vertex> v(y.vertices().begin(), y.vertices().end());
    for (auto& x : v) x += shift;
    all.emplace_back(std::move(v));
  }
  std::sort(all.begin(), all.end());
  return SimplicialComplex::from_canonical(std::move(all));
}

/// Two 4-cycles glued at vertex 1.
inline SimplicialComplex figure_eight() {
  return whitney_complex({{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {5, 6}, {6, 7}, {1, 7}});
}

/// Random complex: m facets, each the set of k draws (with replacement) from
/// {1..n}, where k is uniform in 1..n; the result is their closure.
inline SimplicialComplex random_complex(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 1) throw InvalidInput("random complex needs n >= 1 and m >= 1");
  if (static_cast<std::size_t>(n) > kMaxClosureSetSize) throw InvalidInput("random complex: n too large");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> sets;
  for (int j = 0; j < m; ++j) {
    const auto k = rng.between(1, n);
    std::vector<Vertex> s;
    for (std::int64_t i = 0; i < k; ++i) s.push_back(static_cast<Vertex>(rng.between(1, n)));
    sets.push_back(std::move(s));
  }
  return generate_closure(sets);
}

/// 1-skeleton of an Erdos-Renyi graph on vertices 1..n; each pair i<j is
/// drawn in lexicographic order and kept with probability p.
inline std::vector<Edge> erdos_renyi_edges(int n, double p, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("erdos-renyi needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) {
      if (rng.uniform() < p) edges.emplace_back(i, j);
    }
  }
  return edges;
}

inline SimplicialComplex erdos_renyi_1skeleton(int n, double p, std::uint64_t seed) {
  return skeleton(whitney_complex(erdos_renyi_edges(n, p, seed), n), 1);
}

/// Uniformly random simple graph with exactly `edge_count` edges on vertices
/// 1..n, as a 1-dimensional complex (isolated vertices included).
inline SimplicialComplex random_graph_complex(int n, int edge_count, std::uint64_t seed) {
  if (n < 1) throw InvalidInput("random graph needs n >= 1");
  std::vector<Edge> all;
  for (Vertex i = 1; i <= n; ++i) {
    for (Vertex j = i + 1; j <= n; ++j) all.emplace_back(i, j);
  }
  if (edge_count < 0 || static_cast<std::size_t>(edge_count) > all.size()) {
    throw InvalidInput("random graph: edge count out of range");
  }
  Rng rng(seed);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < static_cast<std::size_t>(edge_count); ++i) {
    const auto j = i + rng.below(all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(static_cast<std::size_t>(edge_count));
  std::sort(all.begin(), all.end());
  return skeleton(whitney_complex(all, n), 1);
}

}  // namespace conzeta
