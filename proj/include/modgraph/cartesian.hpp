#pragma once

// Families of profile graphs over a stable modular graph, and their
// cartesian pullback along elementary extended isogenies.

#include <map>
#include <string>
#include <vector>

#include "modgraph/isogeny.hpp"
#include "modgraph/profile.hpp"

namespace modgraph {

// a: base -> graph identifying the base as the absolute stabilization of
// the graph. a.xi is the zero hom to the rank-0 monoid.
struct FamilyMember {
  CombinatorialMorphism a;
  const AGraph& graph() const { return a.target; }

  bool operator==(const FamilyMember&) const = default;
};

struct CartesianObject {
  AGraph base;  // rank 0
  std::vector<FamilyMember> family;

  bool operator==(const CartesianObject&) const = default;
};

// Violation "cart-identification" unless a is complete, injective on
// vertices and matches the absolute stabilization of its target.
std::vector<Violation> check_identification(const CombinatorialMorphism& a);

// Identity-on-ids identification of the absolute stabilization of tau.
CombinatorialMorphism stabilization_identification(const AGraph& tau);

std::vector<Violation> check_cartesian_object(const CartesianObject& x);

// The object with base the absolute stabilization of each graph given.
// All graphs must have the same absolute stabilization, literally.
CartesianObject make_object(const std::vector<AGraph>& graphs);

enum class CartesianCase { I = 1, II = 2, III = 3, IV = 4 };

std::string to_string(CartesianCase c);

// Which case an elementary extended isogeny falls under.
CartesianCase cartesian_case(const ExtendedIsogeny& phi);

struct CartesianLift {
  CombinatorialMorphism a;  // tau -> tau_i
  ExtendedIsogeny phi;      // tau_i -> sigma'
  const AGraph& graph() const { return a.target; }
};

// The pullback of sigma' under phi: tau -> sigma, where b: sigma -> sigma'
// identifies sigma as the absolute stabilization of sigma'.
std::vector<CartesianLift> cartesian_pullback(const VarietyProfile& p,
                                              const ExtendedIsogeny& phi,
                                              const CombinatorialMorphism& b);

struct ElementaryCartesian {
  CartesianObject source;
  CartesianObject target;
  ExtendedIsogeny base;                 // source.base -> target.base
  std::vector<std::size_t> index_map;   // source family -> target family
  std::vector<ExtendedIsogeny> lifts;   // source member i -> target member index_map[i]
};

// Pulls a whole object back along an elementary extended isogeny.
ElementaryCartesian cartesian_lift(const VarietyProfile& p, const ExtendedIsogeny& phi,
                                   const CartesianObject& target);

// Violation ids: cart-elementary, cart-map, cart-incomplete (message
// "incomplete list"), cart-repetitive (message "repetitive"),
// cart-fiber, cart-degree, plus identification failures.
std::vector<Violation> check_elementary_cartesian(const VarietyProfile& p,
                                                  const ElementaryCartesian& e);

// A morphism stored with its factorization into elementary morphisms.
struct CartesianMorphism {
  std::vector<ElementaryCartesian> factors;
};

// Adds "cart-witness" for a missing factorization and "cart-chain" when
// the factors do not compose.
std::vector<Violation> check_cartesian_morphism(const VarietyProfile& p,
                                                const CartesianMorphism& m);

// Requires identical bases.
CartesianObject oplus(const CartesianObject& x, const CartesianObject& y);
CartesianObject otimes(const CartesianObject& x, const CartesianObject& y);

// The tensor unit: empty base, one empty member of the given rank.
CartesianObject unit_object(std::size_t rank);

// Members grouped by degree.
std::map<long, CartesianObject> homogeneous_decomposition(const VarietyProfile& p,
                                                          const CartesianObject& x);

}  // namespace modgraph
