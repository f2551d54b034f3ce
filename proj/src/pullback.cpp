#include "modgraph/pullback.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "modgraph/canonical.hpp"

namespace modgraph {

namespace {

// Pullback results grow past the user-facing cap; equality checks on them
// are internal.
constexpr std::size_t kInternalMaxFlags = 64;

PullbackResult transport(const MonoidHom& xi, const Contraction& phi,
                         const CombinatorialMorphism& a) {
  std::map<VertexId, VertexId> preimage;
  for (const auto& [v, w] : phi.vertex_map) preimage[w] = v;
  PullbackResult r{a.source, identity_contraction(a.source), {a.source, phi.source, {}, {}, xi}};
  for (const auto& [h, x] : a.flag_map) r.b.flag_map[h] = phi.flag_map.at(x);
  for (const auto& [w, x] : a.vertex_map) r.b.vertex_map[w] = preimage.at(x);
  return r;
}

bool stable_with(const MonoidElement& cls, int genus, std::size_t valence) {
  return !cls.is_zero() || 2 * genus + static_cast<long>(valence) >= 3;
}

PullbackResult elementary_pullback(const MonoidHom& xi, const Contraction& phi,
                                   const CombinatorialMorphism& a) {
  const Edge e = contracted_edges(phi).front();
  const AGraph& sigma = phi.source;
  const AGraph& rho = a.source;
  const FlagId f = e.first, fb = e.second;
  const VertexId v1 = sigma.boundary(f), v2 = sigma.boundary(fb);
  const VertexId v0 = phi.vertex_map.at(v1);

  std::map<VertexId, VertexId> preimage;
  for (const auto& [v, w] : phi.vertex_map) {
    if (w != v0) preimage[w] = v;
  }
  auto down = [&](FlagId h) { return phi.flag_map.at(a.flag_map.at(h)); };

  PullbackResult r;
  r.pi = rho;
  r.b.target = sigma;
  r.b.xi = xi;
  for (const auto& [h, _] : rho.flags()) {
    r.b.flag_map[h] = down(h);
    r.psi.flag_map[h] = h;
  }
  std::vector<VertexId> over;
  for (const auto& [w, _] : rho.vertices()) {
    r.psi.vertex_map[w] = w;
    if (a.vertex_map.at(w) == v0) {
      over.push_back(w);
    } else {
      r.b.vertex_map[w] = preimage.at(a.vertex_map.at(w));
    }
  }

  FlagId next_flag = rho.max_flag_id() + 1;
  VertexId next_vertex = rho.max_vertex_id() + 1;
  if (v1 == v2) {
    for (VertexId w : over) {
      const int g = rho.genus_of(w);
      if (g < 1) throw_domain("pullback-genus", "vertex " + std::to_string(w) + " over a contracted loop has genus 0");
      r.pi.set_genus(w, g - 1);
      r.pi.add_edge(next_flag, w, next_flag + 1, w);
      r.b.flag_map[next_flag] = f;
      r.b.flag_map[next_flag + 1] = fb;
      r.b.vertex_map[w] = v1;
      next_flag += 2;
    }
  } else {
    const int g1 = sigma.genus_of(v1), g2 = sigma.genus_of(v2);
    const MonoidElement c1 = xi(sigma.class_of(v1)), c2 = xi(sigma.class_of(v2));
    for (VertexId w : over) {
      std::vector<FlagId> side1, side2;
      for (FlagId h : flags_at(rho, w)) {
        const VertexId at = sigma.boundary(down(h));
        (at == v1 ? side1 : side2).push_back(h);
        if (at != v1 && at != v2) throw std::logic_error("flag over v0 lands off the contracted edge");
      }
      const bool s1 = stable_with(c1, g1, side1.size() + 1);
      const bool s2 = stable_with(c2, g2, side2.size() + 1);
      if (s1 && s2) {
        const VertexId w2 = next_vertex++;
        r.pi.set_genus(w, g1);
        r.pi.set_class(w, c1);
        r.pi.add_vertex(w2, g2, c2);
        for (FlagId h : side2) r.pi.move_flag(h, w2);
        r.pi.add_edge(next_flag, w, next_flag + 1, w2);
        r.b.flag_map[next_flag] = f;
        r.b.flag_map[next_flag + 1] = fb;
        r.b.vertex_map[w] = v1;
        r.b.vertex_map[w2] = v2;
        r.psi.vertex_map[w2] = w;
        next_flag += 2;
      } else if (s1) {
        r.b.vertex_map[w] = v1;
        for (FlagId h : side2) r.b.flag_map[h] = f;
      } else if (s2) {
        r.b.vertex_map[w] = v2;
        for (FlagId h : side1) r.b.flag_map[h] = fb;
      } else {
        throw_domain("pullback-unstable", "both halves of split vertex " + std::to_string(w) + " are unstable");
      }
    }
  }
  r.psi.source = r.pi;
  r.psi.target = rho;
  r.b.source = r.pi;
  return r;
}

Color flag_color(int image, const std::map<FlagId, FlagId>& backward, FlagId f) {
  for (const auto& [h, x] : backward) {
    if (x == f) return {image, 1, h};
  }
  return {image, 0};
}

Contraction retarget(const Contraction& c, const Relabeling& iso, const AGraph& new_target) {
  Contraction out{c.source, new_target, {}, {}};
  for (const auto& [h, f] : c.flag_map) out.flag_map[iso.flags.at(h)] = f;
  for (const auto& [v, w] : c.vertex_map) out.vertex_map[v] = iso.vertices.at(w);
  return out;
}

}  // namespace

PullbackResult stable_pullback(const MonoidHom& xi, const Contraction& phi,
                               const CombinatorialMorphism& a) {
  return stable_pullback(xi, phi, a, contracted_edges(phi));
}

PullbackResult stable_pullback(const MonoidHom& xi, const Contraction& phi,
                               const CombinatorialMorphism& a,
                               const std::vector<Edge>& order) {
  require_valid("invalid contraction", check_contraction(phi));
  require_valid("invalid combinatorial morphism", check_combinatorial(a));
  if (!(a.xi == xi)) throw_domain("marked-xi", "the combinatorial morphism does not cover xi");
  if (!(a.target == phi.target)) throw_domain("endpoint-mismatch", "a must end at the contraction's target");
  if (!is_stable(a.source)) throw_domain("not-stable", "the pulled-back graph must be stable");

  const std::vector<Contraction> factors = decompose_elementary(phi, order);
  if (factors.empty()) return transport(xi, phi, a);
  CombinatorialMorphism current = a;
  std::optional<Contraction> psi;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    PullbackResult step = elementary_pullback(xi, *it, current);
    psi = psi ? compose(*psi, step.psi) : step.psi;
    current = std::move(step.b);
  }
  return {current.source, std::move(*psi), std::move(current)};
}

bool equivalent(const PullbackResult& x, const PullbackResult& y) {
  if (!(x.psi.target == y.psi.target) || !(x.b.target == y.b.target) || !(x.b.xi == y.b.xi)) {
    return false;
  }
  auto colors = [](const PullbackResult& r) {
    Coloring c;
    for (const auto& [v, _] : r.pi.vertices()) {
      c.vertex[v] = {r.psi.vertex_map.at(v), r.b.vertex_map.at(v)};
    }
    for (const auto& [f, _] : r.pi.flags()) c.flag[f] = flag_color(r.b.flag_map.at(f), r.psi.flag_map, f);
    return c;
  };
  return find_isomorphism(x.pi, y.pi, colors(x), colors(y), kInternalMaxFlags).has_value();
}

std::vector<Violation> check_vertex_square(const PullbackResult& r, const Contraction& phi,
                                           const CombinatorialMorphism& a) {
  std::vector<Violation> out;
  for (const auto& [v, _] : r.pi.vertices()) {
    if (phi.vertex_map.at(r.b.vertex_map.at(v)) != a.vertex_map.at(r.psi.vertex_map.at(v))) {
      out.push_back({"pullback-square", "vertex square fails at " + std::to_string(v)});
    }
  }
  return out;
}

MarkedMorphism identity_marked(const AGraph& tau) {
  return {MonoidHom::identity(tau.rank()), identity_morphism(tau), identity_contraction(tau)};
}

MarkedMorphism compose_marked(const MarkedMorphism& second, const MarkedMorphism& first) {
  Contraction phi = first.contraction;
  if (!(phi.target == second.source())) {
    auto iso = find_isomorphism(phi.target, second.source(), {}, {}, kInternalMaxFlags);
    if (!iso) throw_domain("endpoint-mismatch", "marked morphisms are not composable");
    phi = retarget(phi, *iso, second.source());
  }
  PullbackResult pb = stable_pullback(second.xi, phi, second.comb);
  MarkedMorphism out;
  out.xi = compose(second.xi, first.xi);
  out.comb = compose(first.comb, pb.b);
  out.contraction = compose(second.contraction, pb.psi);
  return out;
}

MarkedMorphism lift_contraction(const Contraction& phi) {
  if (!is_stable(phi.source) || !is_stable(phi.target)) {
    throw_domain("not-stable", "only contractions of stable graphs lift");
  }
  return {MonoidHom::identity(phi.source.rank()), identity_morphism(phi.source), phi};
}

MarkedMorphism lift_combinatorial(const CombinatorialMorphism& a) {
  if (!is_stable(a.source) || !is_stable(a.target)) {
    throw_domain("not-stable", "only morphisms of stable graphs lift");
  }
  return {a.xi, a, identity_contraction(a.source)};
}

bool equivalent(const MarkedMorphism& x, const MarkedMorphism& y) {
  if (!(x.xi == y.xi) || !(x.source() == y.source()) || !(x.target() == y.target())) return false;
  auto colors = [](const MarkedMorphism& m) {
    Coloring c;
    for (const auto& [v, _] : m.mid().vertices()) {
      c.vertex[v] = {m.comb.vertex_map.at(v), m.contraction.vertex_map.at(v)};
    }
    for (const auto& [f, _] : m.mid().flags()) {
      c.flag[f] = flag_color(m.comb.flag_map.at(f), m.contraction.flag_map, f);
    }
    return c;
  };
  return find_isomorphism(x.mid(), y.mid(), colors(x), colors(y), kInternalMaxFlags).has_value();
}

}  // namespace modgraph
