#pragma once

#include <string>

#include "modgraph/graph.hpp"

namespace modgraph {

// Graphviz text. Vertices are labeled "g=..,β=..", edges join vertex
// nodes and every tail is a half-edge to an invisible anchor node.
std::string export_dot(const AGraph& g);

}  // namespace modgraph
