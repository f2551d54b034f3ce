#include "modgraph/cli.hpp"

#include <fstream>

#include "modgraph/canonical.hpp"
#include "modgraph/dot.hpp"
#include "modgraph/enumerate.hpp"
#include "modgraph/pullback.hpp"

namespace modgraph {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::schema, message); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

class Session {
 public:
  explicit Session(const CommandRequest& req) : req_(req) {}

  Json dispatch();
  std::string dot();

 private:
  const Json& payload() const { return req_.payload; }

  void cap(const AGraph& g) const {
    if (g.num_flags() > req_.max_flags) {
      throw Error(ErrorKind::size, "graph has " + std::to_string(g.num_flags()) +
                                       " flags, above the cap of " + std::to_string(req_.max_flags));
    }
  }
  AGraph graph(const Json& j) const {
    AGraph g = graph_from_json(j);
    cap(g);
    return g;
  }
  AGraph graph_arg(const std::string& key) const { return graph(require_key(payload(), key)); }
  AGraph graph_payload() const {
    return payload().contains("graph") ? graph_arg("graph") : graph(payload());
  }

  VarietyProfile profile() const {
    if (req_.profile) return load_profile(*req_.profile);
    if (payload().is_object() && payload().contains("profile")) {
      const Json& p = payload()["profile"];
      return p.is_string() ? load_profile(p.get<std::string>()) : profile_from_json(p);
    }
    schema("verb '" + req_.verb + "' needs a profile");
  }
  VarietyProfile profile_for(const AGraph& g) const {
    VarietyProfile p = profile();
    if (p.rank != g.rank()) throw_domain("rank-mismatch", "profile rank differs from the graph's rank");
    return p;
  }

  Json validate();
  Json invariants();
  Json stabilize_verb();
  Json pushforward_verb();
  Json contract();
  Json cut();
  Json glue();
  Json forget();
  Json compose_verb();
  Json pullback();
  Json cartesian();
  Json boundary();

  const CommandRequest& req_;
};

Json built_json(const BuiltMorphism& b) { return {{"graph", to_json(b.graph)}, {"morphism", to_json(b.morphism)}}; }

Json steps_json(const std::vector<StabilizeStep>& steps) {
  Json out = Json::array();
  for (const auto& s : steps) out.push_back(to_json(s));
  return out;
}

Json Session::validate() {
  const Json& j = payload();
  if (j.is_object() && j.contains("kind")) {
    const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    if (kind == "contraction") {
      const Contraction c = contraction_from_json(j);
      cap(c.source);
    } else if (kind == "combinatorial") {
      const CombinatorialMorphism a = combinatorial_from_json(j);
      cap(a.source);
      cap(a.target);
    } else if (kind == "marked") {
      const MarkedMorphism m = marked_from_json(j);
      cap(m.mid());
    } else {
      schema("unknown morphism kind '" + kind + "'");
    }
    return {{"valid", true}, {"kind", kind}};
  }
  graph_payload();
  return {{"valid", true}, {"kind", "graph"}};
}

Json Session::invariants() {
  const AGraph g = graph_payload();
  Json genus_value = nullptr;
  try {
    genus_value = genus(g);
  } catch (const Error&) {
    // genus is defined only for connected graphs
  }
  return {{"tails", tails(g).size()},
          {"edges", edges(g).size()},
          {"chi", euler_characteristic(g)},
          {"genus", genus_value},
          {"stable", is_stable(g)}};
}

Json Session::stabilize_verb() {
  const Stabilization st = stabilize(graph_payload());
  return {{"graph", to_json(st.graph)}, {"morphism", to_json(st.morphism)}, {"steps", steps_json(st.steps)}};
}

Json Session::pushforward_verb() {
  const MonoidHom xi = hom_from_json(require_key(payload(), "xi"));
  const Pushforward p = pushforward(xi, graph_arg("graph"));
  return {{"graph", to_json(p.graph)}, {"morphism", to_json(p.morphism)}, {"steps", steps_json(p.steps)}};
}

std::vector<Edge> edge_list(const Json& j) {
  if (!j.is_array()) schema("edges must be an array of flag pairs");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      schema("an edge is a pair of flag ids");
    }
    Edge x{e[0].get<FlagId>(), e[1].get<FlagId>()};
    if (x.second < x.first) std::swap(x.first, x.second);
    out.push_back(x);
  }
  return out;
}

Json Session::contract() {
  return to_json(contract_edges(graph_arg("graph"), edge_list(require_key(payload(), "edges"))));
}

Json Session::cut() {
  return built_json(cut_edge(graph_arg("graph"), static_cast<FlagId>(get_int(payload(), "edge"))));
}

Json Session::glue() {
  const auto pairs = edge_list(Json::array({require_key(payload(), "tails")}));
  return built_json(glue_tails(graph_arg("graph"), pairs.front().first, pairs.front().second));
}

Json Session::forget() {
  const StableForget s = stably_forget_tail(graph_arg("graph"), static_cast<FlagId>(get_int(payload(), "tail")));
  Json tm = Json::object();
  for (const auto& [k, v] : s.tail_map) tm[std::to_string(k)] = v;
  return {{"graph", to_json(s.graph)},
          {"morphism", to_json(s.morphism)},
          {"tail_map", tm},
          {"type", to_string(s.type)},
          {"steps", steps_json(s.steps)}};
}

Json Session::compose_verb() {
  const Json& second = require_key(payload(), "second");
  const Json& first = require_key(payload(), "first");
  const std::string kind = second.is_object() && second.contains("kind") && second["kind"].is_string()
                               ? second["kind"].get<std::string>()
                               : "";
  if (kind == "contraction") {
    return to_json(compose(contraction_from_json(second), contraction_from_json(first)));
  }
  if (kind == "combinatorial") {
    return to_json(compose(combinatorial_from_json(second), combinatorial_from_json(first)));
  }
  if (kind == "marked") {
    return to_json(compose_marked(marked_from_json(second), marked_from_json(first)));
  }
  schema("compose needs morphisms of kind contraction, combinatorial or marked");
}

Json Session::pullback() {
  const MonoidHom xi = hom_from_json(require_key(payload(), "xi"));
  const Contraction phi = contraction_from_json(require_key(payload(), "phi"));
  const CombinatorialMorphism a = combinatorial_from_json(require_key(payload(), "a"));
  cap(a.source);
  if (payload().contains("rho") && !(graph_arg("rho") == a.source)) {
    throw_domain("endpoint-mismatch", "rho must be the source of a");
  }
  const PullbackResult r = stable_pullback(xi, phi, a);
  return {{"pi", to_json(r.pi)}, {"psi", to_json(r.psi)}, {"b", to_json(r.b)}};
}

ExtendedIsogeny step_from_json(const AGraph& tau, const Json& step) {
  if (!step.is_object()) schema("step must be an object");
  if (step.contains("contract")) {
    Isogeny iso = identity_isogeny(tau);
    add_contraction(iso, edge_list(Json::array({step["contract"]})));
    return extend(iso);
  }
  if (step.contains("forget")) {
    Isogeny iso = identity_isogeny(tau);
    add_forget(iso, static_cast<FlagId>(get_int(step, "forget")));
    return extend(iso);
  }
  if (step.contains("glue")) {
    const Edge e = edge_list(Json::array({step["glue"]})).front();
    return gluing(tau, {{e.first, e.second}});
  }
  schema("step must contain one of contract, forget, glue");
}

Json Session::cartesian() {
  const AGraph tau = graph_arg("base");
  const ExtendedIsogeny phi = step_from_json(tau, require_key(payload(), "step"));
  CombinatorialMorphism b;
  if (payload().contains("b")) {
    b = combinatorial_from_json(payload()["b"]);
  } else {
    // Identify the target with phi's target through its absolute stabilization.
    const CombinatorialMorphism id = stabilization_identification(graph_arg("target"));
    const auto r = find_isomorphism(phi.target(), id.source, {}, {}, req_.max_flags);
    if (!r) throw_domain("cart-identification", "target does not stabilize to the base isogeny's target");
    b = id;
    b.source = phi.target();
    b.flag_map.clear();
    b.vertex_map.clear();
    for (const auto& [f, g] : r->flags) b.flag_map[f] = id.flag_map.at(g);
    for (const auto& [v, w] : r->vertices) b.vertex_map[v] = id.vertex_map.at(w);
  }
  cap(b.target);
  const VarietyProfile p = profile_for(b.target);
  const auto lifts = cartesian_pullback(p, phi, b);
  Json family = Json::array();
  for (const auto& l : lifts) {
    Json lift = to_json(l.phi);
    lift.erase("source");
    lift.erase("target");
    Json a = to_json(l.a);
    family.push_back({{"graph", to_json(l.graph())},
                      {"deg", deg_graph(p, l.graph())},
                      {"flag_map", a["flag_map"]},
                      {"vertex_map", a["vertex_map"]},
                      {"lift", lift}});
  }
  return {{"case", to_string(cartesian_case(phi))},
          {"profile", to_json(p)},
          {"target_deg", deg_graph(p, b.target)},
          {"family", family}};
}

Json Session::boundary() {
  const VarietyProfile p = profile();
  EnumerationConstraints c;
  c.genus = static_cast<int>(get_int(payload(), "genus"));
  c.tails = static_cast<int>(get_int(payload(), "tails"));
  c.max_degree = payload().contains("max_degree") ? get_int(payload(), "max_degree") : 0;
  c.max_vertices = payload().contains("max_vertices") ? static_cast<int>(get_int(payload(), "max_vertices")) : 1;
  const auto graphs = enumerate_stable_graphs(p, c, req_.max_flags);
  Json out = Json::array();
  for (const auto& g : graphs) out.push_back(to_json(g));
  return {{"count", graphs.size()}, {"graphs", out}};
}

Json Session::dispatch() {
  const std::string& v = req_.verb;
  if (v == "validate") return validate();
  if (v == "invariants") return invariants();
  if (v == "stabilize") return stabilize_verb();
  if (v == "pushforward") return pushforward_verb();
  if (v == "contract") return contract();
  if (v == "cut") return cut();
  if (v == "glue") return glue();
  if (v == "forget") return forget();
  if (v == "compose") return compose_verb();
  if (v == "pullback") return pullback();
  if (v == "cartesian") return cartesian();
  if (v == "boundary") return boundary();
  if (v == "dim" || v == "deg") {
    const AGraph g = graph_payload();
    const VarietyProfile p = profile_for(g);
    return {{v, v == "dim" ? dim_graph(p, g) : deg_graph(p, g)}};
  }
  schema("unknown verb '" + v + "'");
}

std::string Session::dot() { return export_dot(graph_payload()); }

}  // namespace

const std::vector<std::string>& known_verbs() {
  static const std::vector<std::string> verbs = {
      "validate", "invariants", "stabilize", "pushforward", "contract", "cut", "glue", "forget",
      "compose", "pullback", "cartesian", "boundary", "dim", "deg", "export-dot"};
  return verbs;
}

VarietyProfile load_profile(const std::string& ref) {
  if (auto p = named_profile(ref)) return *p;
  std::ifstream in(ref);
  if (!in) schema("unknown profile '" + ref + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) schema("profile file '" + ref + "' is not valid JSON");
  return profile_from_json(j);
}

CommandResult error_result(const Error& e) {
  static const char* names[] = {"schema", "domain", "size"};
  static const int codes[] = {2, 3, 4};
  const auto k = static_cast<std::size_t>(e.kind());
  Json vs = Json::array();
  for (const auto& v : e.violations()) vs.push_back(to_json(v));
  Json doc = {{"error", {{"kind", names[k]}, {"message", e.what()}, {"violations", vs}}}};
  return {codes[k], dump(doc)};
}

CommandResult run(const CommandRequest& req) {
  try {
    Session s(req);
    if (req.verb == "export-dot") return {0, s.dot()};
    return {0, dump(s.dispatch())};
  } catch (const Error& e) {
    return error_result(e);
  } catch (const nlohmann::json::exception& e) {
    return error_result(Error(ErrorKind::schema, e.what()));
  } catch (const std::exception& e) {
    Json doc = {{"error", {{"kind", "internal"}, {"message", e.what()}, {"violations", Json::array()}}}};
    return {1, dump(doc)};
  }
}

}  // namespace modgraph
