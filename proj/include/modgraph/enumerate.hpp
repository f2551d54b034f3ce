#pragma once

// Admissibility filters and enumeration of stable graphs with given
// discrete data, up to isomorphism.

#include <variant>

#include "modgraph/profile.hpp"

namespace modgraph {

struct ForestFilter {};
// ample(beta(v)) < bound at every vertex.
struct DegreeBound {
  Coord bound = 0;
};
using AdmissibilityFilter = std::variant<ForestFilter, DegreeBound>;

bool is_admissible_member(const VarietyProfile& p, const AGraph& tau,
                          const AdmissibilityFilter& filter);

struct EnumerationConstraints {
  int genus = 0;
  int tails = 0;
  Coord max_degree = 0;  // ample(total class) <= max_degree
  int max_vertices = 1;
};

// Connected stable graphs of total genus `genus` with `tails` tails, at most
// `max_vertices` vertices and total class of ample degree at most
// `max_degree`. Results are canonical forms sorted by canonical key. Throws a
// size error when the largest candidate would exceed max_flags.
std::vector<AGraph> enumerate_stable_graphs(const VarietyProfile& p,
                                            const EnumerationConstraints& c,
                                            std::size_t max_flags = kDefaultMaxFlags);

}  // namespace modgraph
