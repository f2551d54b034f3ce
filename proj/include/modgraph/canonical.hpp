#pragma once

// Canonical labeling and isomorphism testing for A-graphs.
//
// Vertices and flags may carry extra colors; isomorphisms must preserve them.
// Colors are how morphisms into fixed graphs are compared: color each
// vertex and flag by its image.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "modgraph/graph.hpp"

namespace modgraph {

using Color = std::vector<std::int64_t>;

struct Coloring {
  std::map<VertexId, Color> vertex;  // missing entries are the empty color
  std::map<FlagId, Color> flag;
};

// Old id -> new id.
struct Relabeling {
  std::map<VertexId, VertexId> vertices;
  std::map<FlagId, FlagId> flags;

  bool operator==(const Relabeling&) const = default;
};

Relabeling inverse(const Relabeling& r);
AGraph relabel(const AGraph& g, const Relabeling& r);

struct CanonicalForm {
  AGraph graph;             // vertices 0..n-1, flags 0..m-1
  Relabeling relabeling;    // input ids -> canonical ids
  std::vector<std::int64_t> key;  // equal iff colored-isomorphic
};

// Throws a size error when g has more than max_flags flags.
CanonicalForm canonical_labeling(const AGraph& g,
                                 const Coloring& colors = {},
                                 std::size_t max_flags = kDefaultMaxFlags);

AGraph canonical_form(const AGraph& g, std::size_t max_flags = kDefaultMaxFlags);
std::vector<std::int64_t> canonical_key(const AGraph& g,
                                        std::size_t max_flags = kDefaultMaxFlags);

bool is_isomorphic(const AGraph& a, const AGraph& b,
                   std::size_t max_flags = kDefaultMaxFlags);

// An isomorphism a -> b respecting colors, if one exists.
std::optional<Relabeling> find_isomorphism(const AGraph& a, const AGraph& b,
                                           const Coloring& ca = {},
                                           const Coloring& cb = {},
                                           std::size_t max_flags = kDefaultMaxFlags);

}  // namespace modgraph
