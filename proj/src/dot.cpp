#include "modgraph/dot.hpp"

#include <sstream>

namespace modgraph {

std::string export_dot(const AGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (const auto& [v, data] : g.vertices()) {
    out << "  v" << v << " [label=\"g=" << data.genus << ",β=" << to_string(data.cls) << "\"];\n";
  }
  for (FlagId t : tails(g)) {
    out << "  t" << t << " [shape=point, style=invis];\n";
    out << "  v" << g.boundary(t) << " -> t" << t << " [arrowhead=none];\n";
  }
  for (const Edge& e : edges(g)) {
    out << "  v" << g.boundary(e.first) << " -> v" << g.boundary(e.second) << " [arrowhead=none];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace modgraph
