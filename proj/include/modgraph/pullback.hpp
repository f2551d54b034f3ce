#pragma once

// Stable pullback and composition in the category of marked stable graphs.

#include "modgraph/marked.hpp"

namespace modgraph {

// Given xi: A -> B, a contraction phi: sigma -> tau of A-graphs and a
// combinatorial morphism a: rho -> tau covering xi with rho stable:
//   pi  --psi-->  rho
//   |b            |a
//   sigma --phi--> tau
struct PullbackResult {
  AGraph pi;
  Contraction psi;            // pi -> rho, with target exactly rho
  CombinatorialMorphism b;    // pi -> sigma, covering xi
};

// phi is split into elementary factors in ascending edge order, unless an
// explicit edge order is given. Pulling back runs from the tau end.
PullbackResult stable_pullback(const MonoidHom& xi, const Contraction& phi,
                               const CombinatorialMorphism& a);
PullbackResult stable_pullback(const MonoidHom& xi, const Contraction& phi,
                               const CombinatorialMorphism& a,
                               const std::vector<Edge>& order);

// Same (pi, psi, b) up to an isomorphism of pi compatible with both maps.
bool equivalent(const PullbackResult& x, const PullbackResult& y);

// Violation "pullback-square" if the vertex square does not commute.
std::vector<Violation> check_vertex_square(const PullbackResult& r,
                                           const Contraction& phi,
                                           const CombinatorialMorphism& a);

MarkedMorphism identity_marked(const AGraph& tau);

// (B, sigma) -> (C, rho) after (A, tau) -> (B, sigma). Endpoints may differ
// by an isomorphism.
MarkedMorphism compose_marked(const MarkedMorphism& second, const MarkedMorphism& first);

// A contraction of stable graphs as a morphism in the same direction.
MarkedMorphism lift_contraction(const Contraction& phi);

// A combinatorial morphism a: sigma -> tau of stable graphs as a morphism
// (A, tau) -> (B, sigma).
MarkedMorphism lift_combinatorial(const CombinatorialMorphism& a);

// Equal hom and endpoints, and an isomorphism of the middle graphs
// compatible with both maps.
bool equivalent(const MarkedMorphism& x, const MarkedMorphism& y);

}  // namespace modgraph
