#pragma once

// Contractions and combinatorial morphisms of A-graphs.

#include <map>
#include <vector>

#include "modgraph/graph.hpp"

namespace modgraph {

// A contraction source -> target. The flag map runs backwards, from the
// target's flags into the source's; the vertex map runs forwards.
struct Contraction {
  AGraph source;
  AGraph target;
  std::map<FlagId, FlagId> flag_map;        // F_target -> F_source
  std::map<VertexId, VertexId> vertex_map;  // V_source -> V_target

  bool operator==(const Contraction&) const = default;
};

// Violation ids: map-total, rank-mismatch, doc-1 .. doc-5, doc-genus,
// doc-class.
std::vector<Violation> check_contraction(const Contraction& c);

// Edges of the source not in the image of the flag map.
std::vector<Edge> contracted_edges(const Contraction& c);
bool is_elementary(const Contraction& c);

// The graph being contracted onto a target vertex.
AGraph contracted_subgraph(const Contraction& c, VertexId v);

Contraction identity_contraction(const AGraph& g);

// Contracts the given edges. Flags keep their ids; each fiber survives as
// its smallest vertex id.
Contraction contract_edges(const AGraph& g, const std::vector<Edge>& to_contract);

// Elementary factors in ascending contracted-edge order, first factor
// first. The composite equals c exactly; the identity gives an empty list.
std::vector<Contraction> decompose_elementary(const Contraction& c);
// Same, contracting the edges in the given order, which must be a
// permutation of the contracted edges.
std::vector<Contraction> decompose_elementary(const Contraction& c,
                                              const std::vector<Edge>& order);

// second ∘ first; requires first.target == second.source.
Contraction compose(const Contraction& second, const Contraction& first);

// A combinatorial morphism source -> target of marked graphs, covering the
// hom xi from the target's monoid to the source's.
struct CombinatorialMorphism {
  AGraph source;
  AGraph target;
  std::map<FlagId, FlagId> flag_map;        // F_source -> F_target
  std::map<VertexId, VertexId> vertex_map;  // V_source -> V_target
  MonoidHom xi;

  bool operator==(const CombinatorialMorphism&) const = default;
};

// Violation ids: map-total, rank-mismatch, commor-1 .. commor-5.
std::vector<Violation> check_combinatorial(const CombinatorialMorphism& a);

// Each vertex's flags map bijectively onto the flags of its image.
bool is_complete(const CombinatorialMorphism& a);

CombinatorialMorphism identity_morphism(const AGraph& g);

// The morphism that is the identity on ids, with xi the identity.
CombinatorialMorphism inclusion_morphism(const AGraph& source, const AGraph& target);

// second ∘ first; requires first.target == second.source.
CombinatorialMorphism compose(const CombinatorialMorphism& second,
                              const CombinatorialMorphism& first);

struct BuiltMorphism {
  AGraph graph;
  CombinatorialMorphism morphism;
};

// Cuts the edge containing flag f. Returns sigma and the morphism sigma -> g.
BuiltMorphism cut_edge(const AGraph& g, FlagId f);

// Removes the tail f without stabilizing. Returns sigma and sigma -> g.
BuiltMorphism forget_tail(const AGraph& g, FlagId f);

// Joins the tails f and h. Returns sigma and the morphism g -> sigma.
BuiltMorphism glue_tails(const AGraph& g, FlagId f, FlagId h);

// Every valid combinatorial morphism source -> target covering xi, found by
// exhaustive search. Meant for small graphs.
std::vector<CombinatorialMorphism> enumerate_combinatorial_morphisms(
    const AGraph& source, const AGraph& target, const MonoidHom& xi);

}  // namespace modgraph
