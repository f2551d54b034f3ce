#pragma once

// Stably forgetting tails, isogenies and extended isogenies.

#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "modgraph/marked.hpp"
#include "modgraph/stabilize.hpp"

namespace modgraph {

// Tails of the new graph -> tails of the old one.
using TailMap = std::map<FlagId, FlagId>;

enum class ForgetType { I = 1, II = 2, III = 3, IV = 4 };

std::string to_string(ForgetType t);

struct StableForget {
  AGraph source;                   // tau
  FlagId tail;                     // the forgotten tail of tau
  AGraph graph;                    // tau', stabilization of tau minus the tail
  CombinatorialMorphism morphism;  // tau' -> tau
  TailMap tail_map;                // S(tau') -> S(tau)
  ForgetType type;
  std::vector<StabilizeStep> steps;  // at most one
};

// Requires tau stable and f a tail.
StableForget stably_forget_tail(const AGraph& tau, FlagId f);

// Checks the three defining clauses (ids dsft-1, dsft-2, dsft-3).
std::vector<Violation> check_stable_forget(const StableForget& s);

struct ContractStep {
  Contraction contraction;
};
struct ForgetStep {
  StableForget forget;
};
using IsogenyStep = std::variant<ContractStep, ForgetStep>;

const AGraph& step_source(const IsogenyStep& s);
const AGraph& step_target(const IsogenyStep& s);

// An isogeny built from elementary steps: edge contractions and stable
// forgets that keep the number of connected components.
struct Isogeny {
  AGraph source;
  std::vector<IsogenyStep> steps;

  const AGraph& target() const;
};

// Appends a step to an isogeny under construction. A forget of type IV
// throws (violation "isogeny-pi0").
void add_contraction(Isogeny& iso, const std::vector<Edge>& to_contract);
void add_forget(Isogeny& iso, FlagId tail);

Isogeny identity_isogeny(const AGraph& tau);

// Violation ids: isogeny-chain, isogeny-pi0, isogeny-stable and those of
// the individual steps.
std::vector<Violation> check_isogeny(const Isogeny& iso);

// S(target) -> S(source), composed along the steps.
TailMap tail_map(const Isogeny& iso);

// The isogeny as one morphism of marked stable graphs.
MarkedMorphism to_marked(const Isogeny& iso);

// second ∘ first; requires first.target() == second.source.
Isogeny compose(const Isogeny& second, const Isogeny& first);

// Glue tails of the source in pairs, then run an isogeny on the glued graph.
struct ExtendedIsogeny {
  AGraph source;
  std::vector<std::pair<FlagId, FlagId>> glued;
  Isogeny isogeny;  // isogeny.source is source with the pairs glued

  const AGraph& target() const { return isogeny.target(); }
};

ExtendedIsogeny extend(const Isogeny& iso);
ExtendedIsogeny gluing(const AGraph& source, const std::vector<std::pair<FlagId, FlagId>>& pairs);

// The combinatorial morphism source -> glued graph.
CombinatorialMorphism glue_morphism(const ExtendedIsogeny& e);

std::vector<Violation> check_extended(const ExtendedIsogeny& e);

bool is_elementary(const ExtendedIsogeny& e);

// second ∘ first, gluing the tail-map images of second's glued pairs into
// first's glued graph and replaying first's steps there.
ExtendedIsogeny compose_extended(const ExtendedIsogeny& second, const ExtendedIsogeny& first);

}  // namespace modgraph
