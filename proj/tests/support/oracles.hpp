#pragma once

// Independent reference computations for the test suites. None of these
// reuse the library routine they are compared against.

#include <set>
#include <vector>

#include "modgraph/enumerate.hpp"
#include "modgraph/morphism.hpp"

namespace oracle {

using namespace modgraph;

// #E minus the GF(2) rank of the vertex-edge incidence matrix.
long gf2_betti1(const AGraph& g);

// Condition 3 of a combinatorial morphism checked literally: for every edge
// {f, fbar} of the source, search for a chain f_1 = a(f), fbar_i = j(f_i),
// consecutive flags sharing a vertex and differing only at vertices whose
// genus and pushed class vanish, ending with fbar_n = a(fbar).
bool chain_condition_holds(const CombinatorialMorphism& a);

// Every assignment of boundary map, involution, genera and classes within
// the bounds, filtered for connectedness, stability and the totals, then
// deduplicated by canonical key.
std::set<std::vector<std::int64_t>> brute_force_stable_keys(const VarietyProfile& p,
                                                            const EnumerationConstraints& c);

// Tries every bijection of flags; meant for at most about 8 flags.
bool brute_force_isomorphic(const AGraph& a, const AGraph& b);

// Connected components by union-find over the edges.
std::size_t component_count(const AGraph& g);

}  // namespace oracle
