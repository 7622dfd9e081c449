#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "conzeta/complex.hpp"
#include "conzeta/generators.hpp"
#include "conzeta/rng.hpp"

namespace conzeta {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};

/// A random 1-dimensional complex with between 3 and max_vertices vertices and
/// at most max_edges edges, all parameters drawn from `seed`.
inline SimplicialComplex random_1d_complex(std::uint64_t seed, int max_vertices = 10, int max_edges = 20) {
  Rng rng(seed);
  const auto n = static_cast<int>(rng.between(3, max_vertices));
  const int most = std::min(max_edges, n * (n - 1) / 2);
  const auto e = static_cast<int>(rng.between(1, most));
  return random_graph_complex(n, e, rng.next());
}

/// Seeds for the random members of the default corpus.
inline constexpr std::uint64_t kCorpusSeed = 20170401;

inline std::vector<NamedComplex> random_1d_corpus(int count, std::uint64_t seed = kCorpusSeed) {
  std::vector<NamedComplex> out;
  for (int i = 0; i < count; ++i) {
    const auto s = seed + static_cast<std::uint64_t>(i);
    out.push_back({"random1d-" + std::to_string(s), random_1d_complex(s)});
  }
  return out;
}

/// K2, K3, C4, C8, the figure eight, 20 random 1-dimensional complexes and
/// five random complexes R(10, 12) of arbitrary dimension.
inline std::vector<NamedComplex> default_corpus() {
  std::vector<NamedComplex> out = {
      {"K2", complete_complex(2)},
      {"K3", complete_complex(3)},
      {"C4", circular_complex(4)},
      {"C8", circular_complex(8)},
      {"figure-eight", figure_eight()},
  };
  for (auto& c : random_1d_corpus(20)) out.push_back(std::move(c));
  for (int i = 0; i < 5; ++i) {
    const auto s = kCorpusSeed + 1000 + static_cast<std::uint64_t>(i);
    out.push_back({"R(10,12)-" + std::to_string(s), random_complex(10, 12, s)});
  }
  return out;
}

/// Some edge {a,b} between existing vertices that is not yet in g, chosen by seed;
/// returns false if g is complete on its vertices.
inline bool random_missing_edge(const SimplicialComplex& g, std::uint64_t seed, Vertex& a, Vertex& b) {
  const auto v = g.vertices();
  std::vector<std::pair<Vertex, Vertex>> missing;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!g.contains(Simplex{v[i], v[j]})) missing.emplace_back(v[i], v[j]);
  if (missing.empty()) return false;
  Rng rng(seed);
  const auto& e = missing[rng.below(missing.size())];
  a = e.first;
  b = e.second;
  return true;
}

}  // namespace conzeta
