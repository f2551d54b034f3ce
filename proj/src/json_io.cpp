#include "modgraph/json_io.hpp"

namespace modgraph {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::schema, message); }

long as_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) schema(what + " must be an integer");
  return j.get<long>();
}

int as_id(const std::string& key, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    schema(what + " key '" + key + "' is not an integer id");
  }
  if (used != key.size()) schema(what + " key '" + key + "' is not an integer id");
  return v;
}

std::vector<Coord> as_coords(const Json& j, const std::string& what) {
  if (!j.is_array()) schema(what + " must be an array of integers");
  std::vector<Coord> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::map<int, int> as_id_map(const Json& j, const std::string& what) {
  if (!j.is_object()) schema(what + " must be an object");
  std::map<int, int> out;
  for (const auto& [k, v] : j.items()) out[as_id(k, what)] = static_cast<int>(as_int(v, what));
  return out;
}

Json id_map_json(const std::map<int, int>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

void expect_kind(const Json& j, const std::string& kind) {
  if (j.contains("kind") && j["kind"] != kind) schema("expected a morphism of kind " + kind);
}

}  // namespace

const Json& require_key(const Json& j, const std::string& key) {
  if (!j.is_object()) schema("expected an object with key '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema("missing key '" + key + "'");
  return *it;
}

long get_int(const Json& j, const std::string& key) { return as_int(require_key(j, key), key); }

GraphParts parse_graph_parts(const Json& j) {
  if (!j.is_object()) schema("a graph must be an object");
  GraphParts p;
  const Json& vs = require_key(j, "vertices");
  if (!vs.is_array()) schema("vertices must be an array");
  std::vector<bool> has_class;
  for (const auto& v : vs) {
    has_class.push_back(v.is_object() && v.contains("class"));
    p.vertices.push_back({static_cast<VertexId>(get_int(v, "id")),
                          v.contains("genus") ? get_int(v, "genus") : 0,
                          has_class.back() ? as_coords(v["class"], "class") : std::vector<Coord>{}});
  }
  if (j.contains("rank")) {
    const long rank = get_int(j, "rank");
    if (rank < 0) schema("rank must be non-negative");
    p.rank = static_cast<std::size_t>(rank);
  } else if (!p.vertices.empty()) {
    p.rank = p.vertices.front().cls.size();
  }
  // An omitted class is zero.
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (!has_class[i]) p.vertices[i].cls.assign(p.rank, 0);
  }
  const Json& fs = require_key(j, "flags");
  if (!fs.is_array()) schema("flags must be an array");
  for (const auto& f : fs) p.flags.push_back(static_cast<FlagId>(as_int(f, "flag")));
  p.boundary = as_id_map(require_key(j, "boundary"), "boundary");
  if (j.contains("involution")) p.involution = as_id_map(j["involution"], "involution");
  return p;
}

AGraph graph_from_json(const Json& j) { return build_graph(parse_graph_parts(j)); }

Json to_json(const MonoidElement& a) {
  Json out = Json::array();
  for (Coord c : a.coords()) out.push_back(c);
  return out;
}

Json to_json(const AGraph& g) {
  Json vs = Json::array(), fs = Json::array(), bd = Json::object(), inv = Json::object();
  for (const auto& [v, data] : g.vertices()) {
    vs.push_back({{"id", v}, {"genus", data.genus}, {"class", to_json(data.cls)}});
  }
  for (const auto& [f, data] : g.flags()) {
    fs.push_back(f);
    bd[std::to_string(f)] = data.vertex;
    inv[std::to_string(f)] = data.partner;
  }
  return {{"rank", g.rank()}, {"vertices", vs}, {"flags", fs}, {"boundary", bd}, {"involution", inv}};
}

MonoidHom hom_from_json(const Json& j) {
  const long src = get_int(j, "source_rank");
  if (src < 0) schema("source_rank must be non-negative");
  const Json& rows = require_key(j, "rows");
  if (!rows.is_array()) schema("rows must be an array");
  std::vector<std::vector<Coord>> m;
  for (const auto& r : rows) m.push_back(as_coords(r, "row"));
  for (const auto& r : m) {
    if (r.size() != static_cast<std::size_t>(src)) schema("every row must have source_rank entries");
    for (Coord x : r) {
      if (x < 0) throw_domain("hom-nonneg", "homomorphism entries must be non-negative");
    }
  }
  return MonoidHom(static_cast<std::size_t>(src), std::move(m));
}

Json to_json(const MonoidHom& h) {
  return {{"source_rank", h.source_rank()}, {"rows", h.rows()}};
}

Contraction contraction_from_json(const Json& j) {
  expect_kind(j, "contraction");
  Contraction c{graph_from_json(require_key(j, "source")), graph_from_json(require_key(j, "target")),
                as_id_map(require_key(j, "flag_map"), "flag_map"),
                as_id_map(require_key(j, "vertex_map"), "vertex_map")};
  require_valid("invalid contraction", check_contraction(c));
  return c;
}

CombinatorialMorphism combinatorial_from_json(const Json& j) {
  expect_kind(j, "combinatorial");
  CombinatorialMorphism a{graph_from_json(require_key(j, "source")),
                          graph_from_json(require_key(j, "target")),
                          as_id_map(require_key(j, "flag_map"), "flag_map"),
                          as_id_map(require_key(j, "vertex_map"), "vertex_map"),
                          hom_from_json(require_key(j, "xi"))};
  require_valid("invalid combinatorial morphism", check_combinatorial(a));
  return a;
}

MarkedMorphism marked_from_json(const Json& j) {
  expect_kind(j, "marked");
  MarkedMorphism m{hom_from_json(require_key(j, "xi")), combinatorial_from_json(require_key(j, "comb")),
                   contraction_from_json(require_key(j, "contraction"))};
  require_valid("invalid marked morphism", check_marked(m));
  return m;
}

Json to_json(const Contraction& c) {
  return {{"kind", "contraction"},
          {"source", to_json(c.source)},
          {"target", to_json(c.target)},
          {"flag_map", id_map_json(c.flag_map)},
          {"vertex_map", id_map_json(c.vertex_map)}};
}

Json to_json(const CombinatorialMorphism& a) {
  return {{"kind", "combinatorial"},
          {"source", to_json(a.source)},
          {"target", to_json(a.target)},
          {"flag_map", id_map_json(a.flag_map)},
          {"vertex_map", id_map_json(a.vertex_map)},
          {"xi", to_json(a.xi)}};
}

Json to_json(const MarkedMorphism& m) {
  return {{"kind", "marked"},
          {"xi", to_json(m.xi)},
          {"comb", to_json(m.comb)},
          {"contraction", to_json(m.contraction)}};
}

Json to_json(const StabilizeStep& s) {
  return {{"case", to_string(s.kind)}, {"vertex", s.vertex}, {"removed", s.removed}};
}

Json to_json(const ExtendedIsogeny& e) {
  Json glued = Json::array();
  for (const auto& [f, g] : e.glued) glued.push_back({f, g});
  Json steps = Json::array();
  for (const auto& step : e.isogeny.steps) {
    if (const auto* c = std::get_if<ContractStep>(&step)) {
      Json es = Json::array();
      for (const Edge& x : contracted_edges(c->contraction)) es.push_back({x.first, x.second});
      steps.push_back({{"contract", es}});
    } else {
      const StableForget& s = std::get<ForgetStep>(step).forget;
      steps.push_back({{"forget", s.tail}, {"type", to_string(s.type)}});
    }
  }
  return {{"source", to_json(e.source)}, {"glued", glued}, {"steps", steps}, {"target", to_json(e.target())}};
}

VarietyProfile profile_from_json(const Json& j) {
  VarietyProfile p;
  p.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  p.dimension = get_int(j, "dim");
  p.canonical = LinearForm(as_coords(require_key(j, "canonical"), "canonical"));
  p.ample = LinearForm(as_coords(require_key(j, "ample"), "ample"));
  p.rank = p.canonical.rank();
  require_valid("invalid profile", check_profile(p));
  return p;
}

Json to_json(const VarietyProfile& p) {
  auto coeffs = [](const LinearForm& f) { return std::vector<Coord>(f.coeffs().begin(), f.coeffs().end()); };
  return {{"name", p.name}, {"dim", p.dimension}, {"canonical", coeffs(p.canonical)}, {"ample", coeffs(p.ample)}};
}

Json to_json(const Violation& v) { return {{"id", v.id}, {"message", v.message}}; }

}  // namespace modgraph
