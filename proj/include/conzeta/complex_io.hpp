#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "conzeta/complex.hpp"

namespace conzeta {

/// Reads the text complex format: one simplex per line as whitespace
/// separated positive integers. Blank lines and lines starting with '#' are
/// skipped. The closure of the listed sets is returned, so facet lists work.
inline SimplicialComplex read_complex(std::istream& in) {
  std::vector<std::vector<Vertex>> sets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    const auto first = sv.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || sv[first] == '#') continue;
    std::vector<Vertex> set;
    std::size_t pos = first;
    while (pos < sv.size()) {
      pos = sv.find_first_not_of(" \t\r", pos);
      if (pos == std::string_view::npos) break;
      auto end = sv.find_first_of(" \t\r", pos);
      if (end == std::string_view::npos) end = sv.size();
      const auto tok = sv.substr(pos, end - pos);
      Vertex v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw ParseError(lineno, "not an integer: '" + std::string(tok) + "'");
      }
      if (v <= 0) throw ParseError(lineno, "vertex identifiers must be positive");
      set.push_back(v);
      pos = end;
    }
    if (set.size() > kMaxClosureSetSize) throw ParseError(lineno, "simplex too large");
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw ParseError(lineno, "no simplices");
  return generate_closure(sets);
}

inline SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_complex(in);
}

inline SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return read_complex(in);
}

/// Writes every simplex, one per line, in canonical order.
inline void write_complex(std::ostream& out, const SimplicialComplex& g) {
  for (const auto& x : g) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out << ' ';
      out << x[i];
    }
    out << '\n';
  }
}

inline std::string format_complex(const SimplicialComplex& g) {
  std::ostringstream out;
  write_complex(out, g);
  return out.str();
}

}  // namespace conzeta
