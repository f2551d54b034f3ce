#pragma once

// Morphisms of marked stable graphs: a quadruple (xi, a, tau', phi) from
// (A, tau) to (B, sigma), where a: tau' -> tau is a combinatorial morphism
// covering xi and phi: tau' -> sigma is a contraction of B-graphs.

#include "modgraph/morphism.hpp"

namespace modgraph {

struct MarkedMorphism {
  MonoidHom xi;
  CombinatorialMorphism comb;  // tau' -> tau
  Contraction contraction;     // tau' -> sigma

  const AGraph& source() const { return comb.target; }
  const AGraph& mid() const { return comb.source; }
  const AGraph& target() const { return contraction.target; }

  bool operator==(const MarkedMorphism&) const = default;
};

// Violation ids from the two parts plus marked-xi, marked-mid, and
// not-stable for any of the three graphs.
std::vector<Violation> check_marked(const MarkedMorphism& m);

}  // namespace modgraph
