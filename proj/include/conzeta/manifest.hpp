#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"

#include "conzeta/complex_io.hpp"
#include "conzeta/generators.hpp"
#include "conzeta/roots.hpp"

namespace conzeta {

/// How to obtain a complex: either a file or a seeded generator.
struct GeneratorSpec {
  std::string kind;  // circular, complete, random, erdos-renyi, random-graph, figure-eight, file
  int n = 0;
  int m = 0;  // facets for random, edges for random-graph
  double p = 0;
  std::uint64_t seed = 0;
  std::string path;
};

struct JobManifest {
  std::string command;  // build, spectrum, zeta, grid, roots, charpoly, refine, verify
  GeneratorSpec input;
  Rect rect;
  Resolution resolution;
  std::string output;  // empty: stdout
  double tolerance = 1e-8;
  double s_re = 0, s_im = 0;
  bool squared = false;
  int refine_steps = 1;
};

inline SimplicialComplex build_complex(const GeneratorSpec& g) {
  if (g.kind == "circular") return circular_complex(g.n);
  if (g.kind == "complete") return complete_complex(g.n);
  if (g.kind == "random") return random_complex(g.n, g.m, g.seed);
  if (g.kind == "erdos-renyi") return erdos_renyi_1skeleton(g.n, g.p, g.seed);
  if (g.kind == "random-graph") return random_graph_complex(g.n, g.m, g.seed);
  if (g.kind == "figure-eight") return figure_eight();
  if (g.kind == "file") return read_complex_file(g.path);
  throw InvalidInput("unknown generator kind '" + g.kind + "'");
}

inline JobManifest parse_manifest(const nlohmann::json& j) {
  JobManifest m;
  try {
    m.command = j.at("command").get<std::string>();
    if (j.contains("input")) {
      const auto& in = j.at("input");
      m.input.kind = in.value("kind", std::string("file"));
      m.input.n = in.value("n", 0);
      m.input.m = in.value("m", 0);
      m.input.p = in.value("p", 0.0);
      m.input.seed = in.value("seed", std::uint64_t{0});
      m.input.path = in.value("path", std::string());
    }
    if (j.contains("rect")) {
      const auto r = j.at("rect").get<std::vector<double>>();
      if (r.size() != 4) throw InvalidInput("rect needs four numbers");
      m.rect = {r[0], r[1], r[2], r[3]};
    }
    if (j.contains("resolution")) {
      const auto r = j.at("resolution").get<std::vector<std::size_t>>();
      if (r.size() != 2) throw InvalidInput("resolution needs two numbers");
      m.resolution = {r[0], r[1]};
    }
    m.output = j.value("output", std::string());
    m.tolerance = j.value("tolerance", 1e-8);
    m.s_re = j.value("s_re", 0.0);
    m.s_im = j.value("s_im", 0.0);
    m.squared = j.value("squared", false);
    m.refine_steps = j.value("refine_steps", 1);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad manifest: ") + e.what());
  }
  return m;
}

inline JobManifest read_manifest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  return parse_manifest(j);
}

}  // namespace conzeta
