// DOT rendering of seeds as valued quivers (circle / square / filled square
// vertices, one arrow i -> j per positive b_ij with label "b_ij, -b_ji",
// omitted when both values are 1) and of exchange graphs.
#pragma once

#include <sstream>
#include <string>

#include "clift/membership.hpp"
#include "clift/seed.hpp"

namespace clift {

inline std::string export_dot(const Seed& s) {
  validate_seed(s);
  std::ostringstream os;
  os << "digraph seed {\n";
  for (const auto& [v, k] : s.vertices()) {
    os << "  \"" << v << "\" [shape=";
    switch (k) {
      case VertexKind::Unfrozen: os << "circle"; break;
      case VertexKind::Semifrozen: os << "square"; break;
      case VertexKind::HighlyFrozen: os << "square, style=filled"; break;
    }
    os << "];\n";
  }
  // b_ij for an ordered vertex pair: matrix entry when j is a column,
  // -b_ji when only i is (frozen/unfrozen convention), 0 when both frozen.
  auto b = [&](const VertexId& i, const VertexId& j) -> long long {
    if (s.matrix().has_col(j)) return s.matrix().entry(i, j);
    if (s.matrix().has_col(i)) return -s.matrix().entry(j, i);
    return 0;
  };
  for (const auto& i : s.matrix().rows()) {
    for (const auto& j : s.matrix().rows()) {
      long long bij = b(i, j);
      if (bij <= 0) continue;
      long long w = -b(j, i);
      os << "  \"" << i << "\" -> \"" << j << "\"";
      if (!(bij == 1 && w == 1)) os << " [label=\"" << bij << "," << w << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

inline std::string export_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "digraph exchange {\n";
  for (const auto& [key, seed] : g.nodes) {
    os << "  \"" << fnv1a64(key) << "\"";
    if (key == g.root) os << " [style=bold]";
    os << ";\n";
  }
  for (const auto& [a, k, b] : g.edges)
    os << "  \"" << fnv1a64(a) << "\" -> \"" << fnv1a64(b) << "\" [label=\"" << k << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace clift
