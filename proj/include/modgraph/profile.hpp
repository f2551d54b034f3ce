#pragma once

// Numerical data of a target variety V: its dimension, the canonical class
// and an ample class, both as linear forms on the class monoid.

#include <optional>
#include <string>

#include "modgraph/graph.hpp"

namespace modgraph {

struct VarietyProfile {
  std::string name;
  std::size_t rank = 0;
  long dimension = 0;
  LinearForm canonical;
  LinearForm ample;

  bool operator==(const VarietyProfile&) const = default;
};

// P^r: dimension r, canonical -(r+1), ample 1, rank 1.
VarietyProfile projective_space(int r);
VarietyProfile point_profile();

// "P1", "P2", "P3" or "point".
std::optional<VarietyProfile> named_profile(const std::string& name);

// Violation ids: profile-rank, ample-positive, profile-dimension.
std::vector<Violation> check_profile(const VarietyProfile& p);

// chi(tau)(dim V - 3) - beta(tau)(omega) + #S - #E
long dim_graph(const VarietyProfile& p, const AGraph& tau);

// beta(tau)(omega) + (dim V - 3)(chi(s) - chi(tau)) + (#S(s) - #S) - (#E(s) - #E)
// where s is the absolute stabilization of tau.
long deg_graph(const VarietyProfile& p, const AGraph& tau);

}  // namespace modgraph
