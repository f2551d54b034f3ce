#include "modgraph/stabilize.hpp"

#include <algorithm>
#include <set>

namespace modgraph {

std::string to_string(StabilizeCase c) {
  switch (c) {
    case StabilizeCase::I: return "I";
    case StabilizeCase::II: return "II";
    case StabilizeCase::III: return "III";
    case StabilizeCase::IV: return "IV";
  }
  return "?";
}

std::optional<StabilizeCase> stabilize_case(const AGraph& g, VertexId v) {
  const auto& vx = g.vertex(v);
  if (!vx.cls.is_zero()) return std::nullopt;
  const std::vector<FlagId> fs = flags_at(g, v);
  if (vx.genus == 0 && fs.size() == 1 && !g.is_tail(fs[0])) return StabilizeCase::I;
  if (vx.genus == 0 && fs.size() == 2) {
    const bool t0 = g.is_tail(fs[0]), t1 = g.is_tail(fs[1]);
    if (t0 != t1) return StabilizeCase::II;
    // Two edge flags that are not a single loop.
    if (!t0 && !t1 && g.involution(fs[0]) != fs[1]) return StabilizeCase::III;
  }
  if (2 * vx.genus + static_cast<long>(fs.size()) < 3) {
    const bool closed = std::all_of(fs.begin(), fs.end(), [&](FlagId f) {
      return g.boundary(g.involution(f)) == v;
    });
    if (closed) return StabilizeCase::IV;
  }
  return std::nullopt;
}

namespace {

StabilizeStep apply_case(AGraph& g, VertexId v, StabilizeCase kind) {
  std::vector<FlagId> fs = flags_at(g, v);
  StabilizeStep step{kind, v, {}};
  switch (kind) {
    case StabilizeCase::I:
      step.removed = fs;
      g.remove_flag(fs[0]);
      break;
    case StabilizeCase::II: {
      // Remove the tail first, then the edge flag whose partner goes free.
      const FlagId tail = g.is_tail(fs[0]) ? fs[0] : fs[1];
      const FlagId inner = tail == fs[0] ? fs[1] : fs[0];
      step.removed = {tail, inner};
      g.remove_flag(tail);
      g.remove_flag(inner);
      break;
    }
    case StabilizeCase::III: {
      const FlagId a = g.involution(fs[0]), b = g.involution(fs[1]);
      step.removed = fs;
      g.remove_flag(fs[0]);
      g.remove_flag(fs[1]);
      g.join(a, b);
      break;
    }
    case StabilizeCase::IV:
      step.removed = fs;
      for (FlagId f : fs) g.remove_flag(f);
      break;
  }
  g.remove_vertex(v);
  return step;
}

}  // namespace

Stabilization stabilize(const AGraph& g, std::span<const VertexId> priority) {
  AGraph current = g;
  std::vector<StabilizeStep> steps;
  while (true) {
    std::vector<VertexId> order;
    std::set<VertexId> listed;
    for (VertexId v : priority) {
      if (current.has_vertex(v) && listed.insert(v).second) order.push_back(v);
    }
    for (const auto& [v, _] : current.vertices()) {
      if (!listed.count(v)) order.push_back(v);
    }
    bool changed = false;
    for (VertexId v : order) {
      if (auto kind = stabilize_case(current, v)) {
        steps.push_back(apply_case(current, v, *kind));
        changed = true;
        break;
      }
    }
    if (!changed) break;
  }
  CombinatorialMorphism inclusion = inclusion_morphism(current, g);
  return {std::move(current), std::move(inclusion), std::move(steps)};
}

Pushforward pushforward(const MonoidHom& xi, const AGraph& tau) {
  if (xi.source_rank() != tau.rank()) {
    throw_domain("rank-mismatch", "hom source rank differs from graph rank");
  }
  if (!is_stable(tau)) throw_domain("not-stable", "pushforward needs a stable graph");
  Stabilization st = stabilize(push_classes(tau, xi));
  CombinatorialMorphism comb{st.graph, tau, {}, {}, xi};
  comb.flag_map = st.morphism.flag_map;
  comb.vertex_map = st.morphism.vertex_map;
  MarkedMorphism m{xi, std::move(comb), identity_contraction(st.graph)};
  return {st.graph, std::move(m), std::move(st.steps)};
}

AGraph absolute_stabilization(const AGraph& tau) {
  return stabilize(push_classes(tau, MonoidHom::zero(tau.rank(), 0))).graph;
}

UniversalPropertyReport check_universal_property(const AGraph& tau,
                                                 const std::vector<AGraph>& pool) {
  UniversalPropertyReport report;
  const Stabilization st = stabilize(tau);
  const MonoidHom id = MonoidHom::identity(tau.rank());
  using Key = std::pair<std::map<FlagId, FlagId>, std::map<VertexId, VertexId>>;
  for (const AGraph& sigma : pool) {
    if (sigma.rank() != tau.rank() || !is_stable(sigma)) continue;
    ++report.sources;
    const auto into_tau = enumerate_combinatorial_morphisms(sigma, tau, id);
    const auto into_stable = enumerate_combinatorial_morphisms(sigma, st.graph, id);
    report.morphisms += into_tau.size();
    std::map<Key, int> hits;
    for (const auto& m : into_tau) hits[{m.flag_map, m.vertex_map}] = 0;
    for (const auto& c : into_stable) {
      const CombinatorialMorphism composite = compose(st.morphism, c);
      auto it = hits.find({composite.flag_map, composite.vertex_map});
      if (it == hits.end()) {
        report.counterexamples.push_back("a morphism into the stabilization does not compose to a morphism into the graph");
      } else {
        ++it->second;
      }
    }
    for (const auto& [key, n] : hits) {
      if (n != 1) {
        report.counterexamples.push_back(n == 0 ? "a morphism into the graph does not factor"
                                                : "a morphism into the graph factors more than once");
      }
    }
  }
  return report;
}

}  // namespace modgraph
