#pragma once

// Stabilization of A-graphs and pushforward along monoid homomorphisms.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modgraph/marked.hpp"

namespace modgraph {

enum class StabilizeCase { I = 1, II = 2, III = 3, IV = 4 };

std::string to_string(StabilizeCase c);

// One rewriting step: which case fired at which vertex, and the flags it
// removed.
struct StabilizeStep {
  StabilizeCase kind;
  VertexId vertex;
  std::vector<FlagId> removed;

  bool operator==(const StabilizeStep&) const = default;
};

struct Stabilization {
  AGraph graph;                    // stable
  CombinatorialMorphism morphism;  // graph -> input, identity on ids
  std::vector<StabilizeStep> steps;
};

// The case that applies at v, if v is unstable.
std::optional<StabilizeCase> stabilize_case(const AGraph& g, VertexId v);

// Repeatedly applies the first applicable case at the first unstable
// vertex. Vertices listed in `priority` are scanned first, in that order,
// then the rest by ascending id.
Stabilization stabilize(const AGraph& g, std::span<const VertexId> priority = {});

struct Pushforward {
  AGraph graph;              // xi_* tau
  MarkedMorphism morphism;   // (xi, inclusion, xi_* tau, identity)
  std::vector<StabilizeStep> steps;
};

// Requires tau stable and xi's source rank equal to tau's rank.
Pushforward pushforward(const MonoidHom& xi, const AGraph& tau);

// Pushforward to the rank-0 monoid.
AGraph absolute_stabilization(const AGraph& tau);

struct UniversalPropertyReport {
  std::size_t sources = 0;    // stable graphs tried
  std::size_t morphisms = 0;  // morphisms into the input checked
  std::vector<std::string> counterexamples;
};

// For each stable graph in the pool, checks that composing with the
// stabilization morphism is a bijection from morphisms into the
// stabilization onto morphisms into tau.
UniversalPropertyReport check_universal_property(const AGraph& tau,
                                                 const std::vector<AGraph>& pool);

}  // namespace modgraph
