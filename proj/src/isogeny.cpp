#include "modgraph/isogeny.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "modgraph/canonical.hpp"
#include "modgraph/pullback.hpp"

namespace modgraph {

std::string to_string(ForgetType t) {
  switch (t) {
    case ForgetType::I: return "I";
    case ForgetType::II: return "II";
    case ForgetType::III: return "III";
    case ForgetType::IV: return "IV";
  }
  return "?";
}

StableForget stably_forget_tail(const AGraph& tau, FlagId f) {
  if (!tau.has_flag(f) || !tau.is_tail(f)) {
    throw_domain("not-a-tail", "flag " + std::to_string(f) + " is not a tail");
  }
  if (!is_stable(tau)) throw_domain("not-stable", "stably forgetting needs a stable graph");
  BuiltMorphism raw = forget_tail(tau, f);
  Stabilization st = stabilize(raw.graph);
  StableForget out{tau, f, st.graph, compose(raw.morphism, st.morphism), {}, ForgetType::I, st.steps};
  if (st.steps.size() > 1) throw std::logic_error("forgetting a tail needed several stabilization steps");
  if (!st.steps.empty()) {
    switch (st.steps.front().kind) {
      case StabilizeCase::II: out.type = ForgetType::II; break;
      case StabilizeCase::III: out.type = ForgetType::III; break;
      case StabilizeCase::IV: out.type = ForgetType::IV; break;
      case StabilizeCase::I: throw std::logic_error("forgetting a tail produced a one-flag vertex");
    }
  }
  for (FlagId h : tails(st.graph)) {
    if (tau.is_tail(h)) {
      out.tail_map[h] = h;
    } else {
      // The tail freed by removing a tripod remembers the tripod's other tail.
      out.tail_map[h] = st.steps.front().removed.front();
    }
  }
  return out;
}

std::vector<Violation> check_stable_forget(const StableForget& s) {
  std::vector<Violation> out;
  for (auto& v : check_combinatorial(s.morphism)) out.push_back(std::move(v));
  if (!s.source.has_flag(s.tail) || !s.source.is_tail(s.tail)) {
    out.push_back({"dsft-1", "forgotten flag is not a tail of the source"});
    return out;
  }
  const AGraph expected = stabilize(forget_tail(s.source, s.tail).graph).graph;
  if (!(expected == s.graph) && !is_isomorphic(expected, s.graph, 64)) {
    out.push_back({"dsft-1", "graph is not the stabilization after forgetting the tail"});
  }
  std::set<FlagId> image;
  for (FlagId h : tails(s.graph)) {
    auto it = s.tail_map.find(h);
    if (it == s.tail_map.end() || !s.source.has_flag(it->second) || !s.source.is_tail(it->second)) {
      out.push_back({"dsft-map", "tail map must send each tail to a tail"});
      continue;
    }
    image.insert(it->second);
    const FlagId ah = s.morphism.flag_map.at(h);
    if (s.source.is_tail(ah) && it->second != ah) {
      out.push_back({"dsft-2", "tail " + std::to_string(h) + " is not sent to its image"});
    }
  }
  if (image.count(s.tail)) out.push_back({"dsft-3", "the forgotten tail is in the image of the tail map"});
  return out;
}

const AGraph& step_source(const IsogenyStep& s) {
  if (auto* c = std::get_if<ContractStep>(&s)) return c->contraction.source;
  return std::get<ForgetStep>(s).forget.source;
}

const AGraph& step_target(const IsogenyStep& s) {
  if (auto* c = std::get_if<ContractStep>(&s)) return c->contraction.target;
  return std::get<ForgetStep>(s).forget.graph;
}

const AGraph& Isogeny::target() const {
  return steps.empty() ? source : step_target(steps.back());
}

void add_contraction(Isogeny& iso, const std::vector<Edge>& to_contract) {
  iso.steps.push_back(ContractStep{contract_edges(iso.target(), to_contract)});
}

void add_forget(Isogeny& iso, FlagId tail) {
  StableForget s = stably_forget_tail(iso.target(), tail);
  if (s.type == ForgetType::IV) {
    throw_domain("isogeny-pi0", "forgetting tail " + std::to_string(tail) + " removes a whole component");
  }
  iso.steps.push_back(ForgetStep{std::move(s)});
}

Isogeny identity_isogeny(const AGraph& tau) { return {tau, {}}; }

std::vector<Violation> check_isogeny(const Isogeny& iso) {
  std::vector<Violation> out;
  if (!is_stable(iso.source)) out.push_back({"isogeny-stable", "source is not stable"});
  const AGraph* current = &iso.source;
  for (const auto& step : iso.steps) {
    if (!(step_source(step) == *current)) {
      out.push_back({"isogeny-chain", "step does not start where the previous one ended"});
    }
    if (auto* c = std::get_if<ContractStep>(&step)) {
      for (auto& v : check_contraction(c->contraction)) out.push_back(std::move(v));
    } else {
      const auto& s = std::get<ForgetStep>(step).forget;
      for (auto& v : check_stable_forget(s)) out.push_back(std::move(v));
      if (s.type == ForgetType::IV) out.push_back({"isogeny-pi0", "a forget step removes a component"});
    }
    current = &step_target(step);
  }
  if (connected_components(iso.source).size() != connected_components(iso.target()).size()) {
    out.push_back({"isogeny-pi0", "components of source and target do not correspond"});
  }
  return out;
}

TailMap tail_map(const Isogeny& iso) {
  TailMap m;
  for (FlagId h : tails(iso.target())) m[h] = h;
  for (auto it = iso.steps.rbegin(); it != iso.steps.rend(); ++it) {
    for (auto& [h, x] : m) {
      if (auto* c = std::get_if<ContractStep>(&*it)) {
        x = c->contraction.flag_map.at(x);
      } else {
        x = std::get<ForgetStep>(*it).forget.tail_map.at(x);
      }
    }
  }
  return m;
}

MarkedMorphism to_marked(const Isogeny& iso) {
  MarkedMorphism out = identity_marked(iso.source);
  for (const auto& step : iso.steps) {
    const MarkedMorphism next = std::holds_alternative<ContractStep>(step)
                                    ? lift_contraction(std::get<ContractStep>(step).contraction)
                                    : lift_combinatorial(std::get<ForgetStep>(step).forget.morphism);
    out = compose_marked(next, out);
  }
  return out;
}

Isogeny compose(const Isogeny& second, const Isogeny& first) {
  if (!(first.target() == second.source)) throw_domain("endpoint-mismatch", "isogenies are not composable");
  Isogeny out = first;
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return out;
}

ExtendedIsogeny extend(const Isogeny& iso) { return {iso.source, {}, iso}; }

namespace {

AGraph glue_all(const AGraph& g, const std::vector<std::pair<FlagId, FlagId>>& pairs) {
  AGraph out = g;
  for (const auto& [f, h] : pairs) out = glue_tails(out, f, h).graph;
  return out;
}

}  // namespace

ExtendedIsogeny gluing(const AGraph& source, const std::vector<std::pair<FlagId, FlagId>>& pairs) {
  return {source, pairs, identity_isogeny(glue_all(source, pairs))};
}

CombinatorialMorphism glue_morphism(const ExtendedIsogeny& e) {
  return inclusion_morphism(e.source, e.isogeny.source);
}

std::vector<Violation> check_extended(const ExtendedIsogeny& e) {
  std::vector<Violation> out;
  if (!is_stable(e.source)) out.push_back({"isogeny-stable", "source is not stable"});
  try {
    if (!(glue_all(e.source, e.glued) == e.isogeny.source)) {
      out.push_back({"extended-glue", "isogeny does not start at the glued source"});
    }
  } catch (const Error&) {
    out.push_back({"extended-glue", "glued flags must be distinct tails"});
  }
  for (auto& v : check_isogeny(e.isogeny)) out.push_back(std::move(v));
  return out;
}

bool is_elementary(const ExtendedIsogeny& e) {
  if (e.glued.size() == 1) return e.isogeny.steps.empty();
  if (!e.glued.empty() || e.isogeny.steps.size() != 1) return false;
  if (auto* c = std::get_if<ContractStep>(&e.isogeny.steps.front())) return is_elementary(c->contraction);
  return true;
}

ExtendedIsogeny compose_extended(const ExtendedIsogeny& second, const ExtendedIsogeny& first) {
  if (!(first.target() == second.source)) {
    throw_domain("endpoint-mismatch", "extended isogenies are not composable");
  }
  const TailMap back = tail_map(first.isogeny);
  std::vector<std::pair<FlagId, FlagId>> pulled;
  for (const auto& [f, h] : second.glued) pulled.emplace_back(back.at(f), back.at(h));

  Isogeny replay{glue_all(first.isogeny.source, pulled), {}};
  for (const auto& step : first.isogeny.steps) {
    if (auto* c = std::get_if<ContractStep>(&step)) {
      add_contraction(replay, contracted_edges(c->contraction));
    } else {
      add_forget(replay, std::get<ForgetStep>(step).forget.tail);
    }
  }
  if (!(replay.target() == second.isogeny.source)) {
    throw std::logic_error("replayed isogeny misses the glued graph");
  }
  ExtendedIsogeny out{first.source, first.glued, compose(second.isogeny, replay)};
  out.glued.insert(out.glued.end(), pulled.begin(), pulled.end());
  return out;
}

}  // namespace modgraph
