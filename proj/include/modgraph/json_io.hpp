#pragma once

// JSON (de)serialization. Parsing failures raise schema errors; data that
// parses but violates a definition raises domain errors.

#include <json.hpp>

#include "modgraph/cartesian.hpp"
#include "modgraph/isogeny.hpp"
#include "modgraph/marked.hpp"
#include "modgraph/profile.hpp"

namespace modgraph {

using Json = nlohmann::json;

// {"rank", "flags", "vertices": [{"id","genus","class"}], "boundary",
//  "involution"}. A flag without an involution entry is a tail. "rank"
// defaults to the length of the first class.
GraphParts parse_graph_parts(const Json& j);
AGraph graph_from_json(const Json& j);
Json to_json(const AGraph& g);

Json to_json(const MonoidElement& a);
MonoidHom hom_from_json(const Json& j);  // {"source_rank", "rows"}
Json to_json(const MonoidHom& h);

// Morphisms carry "kind": "contraction", "combinatorial" or "marked".
Contraction contraction_from_json(const Json& j);
CombinatorialMorphism combinatorial_from_json(const Json& j);
MarkedMorphism marked_from_json(const Json& j);
Json to_json(const Contraction& c);
Json to_json(const CombinatorialMorphism& a);
Json to_json(const MarkedMorphism& m);

Json to_json(const StabilizeStep& s);
Json to_json(const ExtendedIsogeny& e);

// {"name"?, "dim", "canonical", "ample"}
VarietyProfile profile_from_json(const Json& j);
Json to_json(const VarietyProfile& p);

Json to_json(const Violation& v);

// Parse helpers raising schema errors with the offending key in the message.
const Json& require_key(const Json& j, const std::string& key);
long get_int(const Json& j, const std::string& key);

}  // namespace modgraph
