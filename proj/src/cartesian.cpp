#include "modgraph/cartesian.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "modgraph/canonical.hpp"

namespace modgraph {

namespace {

constexpr std::size_t kInternalMaxFlags = 64;

MonoidHom to_point(std::size_t rank) { return MonoidHom::zero(rank, 0); }

// F(target) -> F(source) of a contraction, inverted.
std::map<FlagId, FlagId> inverse_flags(const std::map<FlagId, FlagId>& m) {
  std::map<FlagId, FlagId> out;
  for (const auto& [a, b] : m) out[b] = a;
  return out;
}

Violation incomplete() { return {"cart-incomplete", "incomplete list"}; }
Violation repetitive() { return {"cart-repetitive", "repetitive"}; }

}  // namespace

std::string to_string(CartesianCase c) {
  switch (c) {
    case CartesianCase::I: return "I";
    case CartesianCase::II: return "II";
    case CartesianCase::III: return "III";
    case CartesianCase::IV: return "IV";
  }
  return "?";
}

std::vector<Violation> check_identification(const CombinatorialMorphism& a) {
  std::vector<Violation> out;
  if (a.source.rank() != 0) {
    return {{"cart-identification", "identified graph must have rank 0"}};
  }
  if (!(a.xi == to_point(a.target.rank()))) {
    return {{"cart-identification", "identification must cover the zero hom"}};
  }
  auto problems = check_combinatorial(a);
  if (!problems.empty()) {
    for (auto& v : problems) out.push_back(std::move(v));
    return out;
  }
  if (!is_complete(a)) out.push_back({"cart-identification", "identification is not complete"});
  std::set<VertexId> images;
  for (const auto& [_, w] : a.vertex_map) images.insert(w);
  if (images.size() != a.vertex_map.size()) {
    out.push_back({"cart-identification", "identification is not injective on vertices"});
  }
  const AGraph st = stabilize(push_classes(a.target, to_point(a.target.rank()))).graph;
  Coloring ca, cs;
  for (const auto& [v, w] : a.vertex_map) ca.vertex[v] = {w};
  for (const auto& [f, h] : a.flag_map) ca.flag[f] = {h};
  for (const auto& [v, _] : st.vertices()) cs.vertex[v] = {v};
  for (const auto& [f, _] : st.flags()) cs.flag[f] = {f};
  if (!find_isomorphism(a.source, st, ca, cs, kInternalMaxFlags)) {
    out.push_back({"cart-identification", "source is not the absolute stabilization of the target"});
  }
  return out;
}

CombinatorialMorphism stabilization_identification(const AGraph& tau) {
  const AGraph st = stabilize(push_classes(tau, to_point(tau.rank()))).graph;
  CombinatorialMorphism a{st, tau, {}, {}, to_point(tau.rank())};
  for (const auto& [f, _] : st.flags()) a.flag_map[f] = f;
  for (const auto& [v, _] : st.vertices()) a.vertex_map[v] = v;
  return a;
}

std::vector<Violation> check_cartesian_object(const CartesianObject& x) {
  std::vector<Violation> out;
  if (x.base.rank() != 0) out.push_back({"cart-base", "base must have rank 0"});
  if (!is_stable(x.base)) out.push_back({"not-stable", "base is not stable"});
  for (const auto& m : x.family) {
    if (!(m.a.source == x.base)) out.push_back({"cart-base", "member does not start at the base"});
    if (!is_stable(m.graph())) out.push_back({"not-stable", "member is not stable"});
    for (auto& v : check_identification(m.a)) out.push_back(std::move(v));
  }
  return out;
}

CartesianObject make_object(const std::vector<AGraph>& graphs) {
  CartesianObject x;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CombinatorialMorphism a = stabilization_identification(graphs[i]);
    if (i == 0) {
      x.base = a.source;
    } else if (!(a.source == x.base)) {
      throw_domain("cart-base", "graphs have different absolute stabilizations");
    }
    x.family.push_back({std::move(a)});
  }
  return x;
}

CartesianCase cartesian_case(const ExtendedIsogeny& phi) {
  if (!is_elementary(phi)) throw_domain("cart-elementary", "extended isogeny is not elementary");
  if (!phi.glued.empty()) return CartesianCase::IV;
  const auto& step = phi.isogeny.steps.front();
  if (std::holds_alternative<ForgetStep>(step)) return CartesianCase::III;
  const Edge e = contracted_edges(std::get<ContractStep>(step).contraction).front();
  return phi.source.boundary(e.first) == phi.source.boundary(e.second) ? CartesianCase::I
                                                                        : CartesianCase::II;
}

std::vector<CartesianLift> cartesian_pullback(const VarietyProfile& p,
                                              const ExtendedIsogeny& phi,
                                              const CombinatorialMorphism& b) {
  require_valid("invalid extended isogeny", check_extended(phi));
  const CartesianCase kind = cartesian_case(phi);
  if (phi.source.rank() != 0) throw_domain("rank-mismatch", "base isogeny must be between rank-0 graphs");
  if (!(b.source == phi.target())) throw_domain("endpoint-mismatch", "b must start at the isogeny's target");
  if (b.target.rank() != p.rank) throw_domain("rank-mismatch", "b's target rank differs from the profile");
  require_valid("b does not identify an absolute stabilization", check_identification(b));

  const AGraph& tau = phi.source;
  const AGraph& sp = b.target;  // sigma'
  const std::size_t k = sp.rank();
  const FlagId fresh = sp.max_flag_id() + 1;
  const VertexId fresh_vertex = sp.max_vertex_id() + 1;

  // Default parts of a: tau -> tau_i through sigma.
  auto base_map = [&](const std::map<FlagId, FlagId>& to_sigma_flag,
                      const std::map<VertexId, VertexId>& to_sigma_vertex, const AGraph& target) {
    CombinatorialMorphism a{tau, target, {}, {}, to_point(k)};
    for (const auto& [h, s] : to_sigma_flag) a.flag_map[h] = b.flag_map.at(s);
    for (const auto& [v, s] : to_sigma_vertex) a.vertex_map[v] = b.vertex_map.at(s);
    return a;
  };

  std::vector<CartesianLift> out;
  if (kind == CartesianCase::I || kind == CartesianCase::II) {
    const Contraction& c = std::get<ContractStep>(phi.isogeny.steps.front()).contraction;
    const Edge e = contracted_edges(c).front();
    const std::map<FlagId, FlagId> up = inverse_flags(c.flag_map);
    const VertexId v1 = tau.boundary(e.first), v2 = tau.boundary(e.second);
    const VertexId w0 = b.vertex_map.at(c.vertex_map.at(v1));
    if (kind == CartesianCase::I) {
      AGraph t0 = sp;
      t0.set_genus(w0, sp.genus_of(w0) - 1);
      t0.add_edge(fresh, w0, fresh + 1, w0);
      CombinatorialMorphism a = base_map(up, c.vertex_map, t0);
      a.flag_map[e.first] = fresh;
      a.flag_map[e.second] = fresh + 1;
      Isogeny iso{t0, {}};
      add_contraction(iso, {{fresh, fresh + 1}});
      out.push_back({std::move(a), extend(iso)});
    } else {
      const VertexId w2 = fresh_vertex;
      std::vector<FlagId> second_side;
      for (FlagId q : flags_at(sp, w0)) {
        FlagId s = -1;
        for (const auto& [h, x] : b.flag_map) {
          if (x == q) s = h;
        }
        if (s < 0) throw std::logic_error("identification is not complete at the contracted vertex");
        if (tau.boundary(c.flag_map.at(s)) == v2) second_side.push_back(q);
      }
      for (const auto& [b1, b2] : enumerate_pair_decompositions(sp.class_of(w0))) {
        AGraph ti = sp;
        ti.set_genus(w0, tau.genus_of(v1));
        ti.set_class(w0, b1);
        ti.add_vertex(w2, tau.genus_of(v2), b2);
        for (FlagId q : second_side) ti.move_flag(q, w2);
        ti.add_edge(fresh, w0, fresh + 1, w2);
        if (!is_stable(ti)) throw std::logic_error("class split produced an unstable graph");
        CombinatorialMorphism a = base_map(up, c.vertex_map, ti);
        a.flag_map[e.first] = fresh;
        a.flag_map[e.second] = fresh + 1;
        a.vertex_map[v1] = w0;
        a.vertex_map[v2] = w2;
        Isogeny iso{ti, {}};
        add_contraction(iso, {{fresh, fresh + 1}});
        out.push_back({std::move(a), extend(iso)});
      }
    }
    return out;
  }

  std::map<FlagId, FlagId> same_flags;
  for (const auto& [f, _] : phi.target().flags()) same_flags[f] = f;
  std::map<VertexId, VertexId> same_vertices;
  for (const auto& [v, _] : phi.target().vertices()) same_vertices[v] = v;

  if (kind == CartesianCase::IV) {
    const FlagId q = b.flag_map.at(phi.glued.front().first);
    const FlagId partner = sp.involution(q);
    AGraph t0 = sp;
    t0.split(q);
    CombinatorialMorphism a = base_map(same_flags, same_vertices, t0);
    out.push_back({std::move(a), gluing(t0, {{q, partner}})});
    return out;
  }

  const StableForget& s = std::get<ForgetStep>(phi.isogeny.steps.front()).forget;
  const FlagId t = s.tail;
  AGraph t0 = sp;
  std::map<FlagId, FlagId> extra;
  std::map<VertexId, VertexId> extra_vertex;
  switch (s.type) {
    case ForgetType::I: {
      const VertexId v = tau.boundary(t);
      t0.add_tail(fresh, b.vertex_map.at(v));
      extra[t] = fresh;
      break;
    }
    case ForgetType::II:
    case ForgetType::III: {
      const StabilizeStep& step = s.steps.front();
      const FlagId f1 = step.removed[0], f2 = step.removed[1];
      // The new vertex sits on the flag q, which plays the role of the
      // partner of f2 (type II) or of f1 (type III).
      const FlagId q = s.type == ForgetType::II ? b.flag_map.at(tau.involution(f2))
                                                : b.flag_map.at(tau.involution(f1));
      const VertexId x = fresh_vertex;
      const FlagId nt = fresh, ny = fresh + 1, ne = fresh + 2;
      t0.add_vertex(x, 0, MonoidElement::zero(k));
      t0.add_tail(nt, x);
      t0.add_tail(ny, x);
      t0.add_tail(ne, x);
      if (!t0.is_tail(q)) {
        const FlagId partner = t0.involution(q);
        t0.split(q);
        t0.join(ny, partner);
      }
      t0.join(ne, q);
      extra[t] = nt;
      if (s.type == ForgetType::II) {
        extra[f1] = ny;
        extra[f2] = ne;
      } else {
        extra[f1] = ne;
        extra[f2] = ny;
      }
      extra_vertex[step.vertex] = x;
      break;
    }
    case ForgetType::IV:
      throw_domain("isogeny-pi0", "a forget that removes a component has no cartesian lift");
  }
  CombinatorialMorphism a = base_map(same_flags, same_vertices, t0);
  for (const auto& [h, x] : extra) a.flag_map[h] = x;
  for (const auto& [v, x] : extra_vertex) a.vertex_map[v] = x;
  Isogeny iso{t0, {}};
  add_forget(iso, extra.at(t));
  out.push_back({std::move(a), extend(iso)});
  return out;
}

ElementaryCartesian cartesian_lift(const VarietyProfile& p, const ExtendedIsogeny& phi,
                                   const CartesianObject& target) {
  if (!(phi.target() == target.base)) throw_domain("endpoint-mismatch", "isogeny must end at the object's base");
  ElementaryCartesian e{{phi.source, {}}, target, phi, {}, {}};
  for (std::size_t j = 0; j < target.family.size(); ++j) {
    for (auto& lift : cartesian_pullback(p, phi, target.family[j].a)) {
      e.source.family.push_back({lift.a});
      e.index_map.push_back(j);
      e.lifts.push_back(std::move(lift.phi));
    }
  }
  return e;
}

std::vector<Violation> check_elementary_cartesian(const VarietyProfile& p,
                                                  const ElementaryCartesian& e) {
  std::vector<Violation> out;
  if (!is_elementary(e.base)) return {{"cart-elementary", "base isogeny is not elementary"}};
  for (auto& v : check_extended(e.base)) out.push_back(std::move(v));
  if (!(e.base.source == e.source.base) || !(e.base.target() == e.target.base)) {
    out.push_back({"cart-map", "base isogeny does not connect the bases"});
  }
  for (auto& v : check_cartesian_object(e.source)) out.push_back(std::move(v));
  for (auto& v : check_cartesian_object(e.target)) out.push_back(std::move(v));
  const std::size_t n = e.source.family.size();
  if (e.index_map.size() != n || e.lifts.size() != n) {
    out.push_back({"cart-map", "index map and lifts must cover the source family"});
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (e.index_map[i] >= e.target.family.size()) {
      out.push_back({"cart-map", "index map leaves the target family"});
      return out;
    }
    const ExtendedIsogeny& lift = e.lifts[i];
    if (!(lift.source == e.source.family[i].graph()) ||
        !(lift.target() == e.target.family[e.index_map[i]].graph())) {
      out.push_back({"cart-map", "lift " + std::to_string(i) + " has the wrong endpoints"});
    }
    for (auto& v : check_extended(lift)) out.push_back(std::move(v));
    if (deg_graph(p, lift.source) != deg_graph(p, lift.target())) {
      out.push_back({"cart-degree", "lift " + std::to_string(i) + " changes the degree"});
    }
  }
  if (!out.empty()) return out;

  const CartesianCase kind = cartesian_case(e.base);
  const AGraph& tau = e.base.source;
  for (std::size_t j = 0; j < e.target.family.size(); ++j) {
    std::vector<std::size_t> fiber;
    for (std::size_t i = 0; i < n; ++i) {
      if (e.index_map[i] == j) fiber.push_back(i);
    }
    const CombinatorialMorphism& b = e.target.family[j].a;
    if (kind != CartesianCase::II) {
      if (fiber.empty()) out.push_back(incomplete());
      if (fiber.size() > 1) out.push_back(repetitive());
    }
    if (kind == CartesianCase::I || kind == CartesianCase::II) {
      const Contraction& c = std::get<ContractStep>(e.base.isogeny.steps.front()).contraction;
      const Edge edge = contracted_edges(c).front();
      const VertexId v1 = tau.boundary(edge.first), v2 = tau.boundary(edge.second);
      const VertexId w0 = b.vertex_map.at(c.vertex_map.at(v1));
      std::vector<ElementPair> seen;
      for (std::size_t i : fiber) {
        const CombinatorialMorphism& a = e.source.family[i].a;
        const ExtendedIsogeny& lift = e.lifts[i];
        bool ok = lift.glued.empty() && lift.isogeny.steps.size() == 1 &&
                  std::holds_alternative<ContractStep>(lift.isogeny.steps.front());
        if (ok) {
          const Contraction& ci = std::get<ContractStep>(lift.isogeny.steps.front()).contraction;
          Edge want{a.flag_map.at(edge.first), a.flag_map.at(edge.second)};
          if (want.second < want.first) std::swap(want.first, want.second);
          const auto got = contracted_edges(ci);
          ok = got.size() == 1 && got.front() == want &&
               ci.vertex_map.at(a.vertex_map.at(v1)) == w0;
        }
        if (!ok) {
          out.push_back({"cart-fiber", "lift " + std::to_string(i) + " does not contract the lifted edge onto its image"});
          continue;
        }
        if (kind == CartesianCase::II) {
          ElementPair pair{a.target.class_of(a.vertex_map.at(v1)), a.target.class_of(a.vertex_map.at(v2))};
          if (std::find(seen.begin(), seen.end(), pair) != seen.end()) out.push_back(repetitive());
          seen.push_back(std::move(pair));
        }
      }
      if (kind == CartesianCase::II) {
        for (const auto& want : enumerate_pair_decompositions(b.target.class_of(w0))) {
          if (std::find(seen.begin(), seen.end(), want) == seen.end()) {
            out.push_back(incomplete());
            break;
          }
        }
      }
    } else if (kind == CartesianCase::III) {
      const FlagId t = std::get<ForgetStep>(e.base.isogeny.steps.front()).forget.tail;
      for (std::size_t i : fiber) {
        const ExtendedIsogeny& lift = e.lifts[i];
        const bool ok = lift.glued.empty() && lift.isogeny.steps.size() == 1 &&
                        std::holds_alternative<ForgetStep>(lift.isogeny.steps.front()) &&
                        std::get<ForgetStep>(lift.isogeny.steps.front()).forget.tail ==
                            e.source.family[i].a.flag_map.at(t);
        if (!ok) out.push_back({"cart-fiber", "lift " + std::to_string(i) + " does not forget the lifted tail"});
      }
    } else {
      for (std::size_t i : fiber) {
        const ExtendedIsogeny& lift = e.lifts[i];
        if (lift.glued.size() != 1 || !lift.isogeny.steps.empty()) {
          out.push_back({"cart-fiber", "lift " + std::to_string(i) + " does more than glue two tails"});
          continue;
        }
        const CombinatorialMorphism lhs = compose(glue_morphism(lift), e.source.family[i].a);
        const CombinatorialMorphism rhs = compose(b, glue_morphism(e.base));
        if (lhs.flag_map != rhs.flag_map || lhs.vertex_map != rhs.vertex_map) {
          out.push_back({"cart-fiber", "gluing square does not commute for lift " + std::to_string(i)});
        }
      }
    }
  }
  return out;
}

std::vector<Violation> check_cartesian_morphism(const VarietyProfile& p, const CartesianMorphism& m) {
  if (m.factors.empty()) return {{"cart-witness", "no factorization stored"}};
  std::vector<Violation> out;
  for (std::size_t k = 0; k < m.factors.size(); ++k) {
    for (auto& v : check_elementary_cartesian(p, m.factors[k])) out.push_back(std::move(v));
    if (k + 1 < m.factors.size() && !(m.factors[k].target == m.factors[k + 1].source)) {
      out.push_back({"cart-chain", "factor " + std::to_string(k) + " does not end where the next starts"});
    }
  }
  return out;
}

CartesianObject oplus(const CartesianObject& x, const CartesianObject& y) {
  if (!(x.base == y.base)) throw_domain("cart-base", "direct sum needs identical bases");
  CartesianObject out = x;
  out.family.insert(out.family.end(), y.family.begin(), y.family.end());
  return out;
}

CartesianObject otimes(const CartesianObject& x, const CartesianObject& y) {
  const DisjointUnion base = disjoint_union_with_maps(x.base, y.base);
  CartesianObject out{base.graph, {}};
  for (const auto& mx : x.family) {
    for (const auto& my : y.family) {
      if (mx.graph().rank() != my.graph().rank()) throw_domain("rank-mismatch", "members have different ranks");
      const DisjointUnion du = disjoint_union_with_maps(mx.graph(), my.graph());
      CombinatorialMorphism a{base.graph, du.graph, {}, {}, to_point(du.graph.rank())};
      for (const auto& [f, g] : base.left_flags) a.flag_map[g] = du.left_flags.at(mx.a.flag_map.at(f));
      for (const auto& [f, g] : base.right_flags) a.flag_map[g] = du.right_flags.at(my.a.flag_map.at(f));
      for (const auto& [v, w] : base.left_vertices) a.vertex_map[w] = du.left_vertices.at(mx.a.vertex_map.at(v));
      for (const auto& [v, w] : base.right_vertices) a.vertex_map[w] = du.right_vertices.at(my.a.vertex_map.at(v));
      out.family.push_back({std::move(a)});
    }
  }
  return out;
}

CartesianObject unit_object(std::size_t rank) {
  return {AGraph(0), {{CombinatorialMorphism{AGraph(0), AGraph(rank), {}, {}, to_point(rank)}}}};
}

std::map<long, CartesianObject> homogeneous_decomposition(const VarietyProfile& p,
                                                          const CartesianObject& x) {
  std::map<long, CartesianObject> out;
  for (const auto& m : x.family) {
    auto [it, fresh] = out.try_emplace(deg_graph(p, m.graph()), CartesianObject{x.base, {}});
    it->second.family.push_back(m);
  }
  return out;
}

}  // namespace modgraph
