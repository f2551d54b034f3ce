#include "modgraph/random_graphs.hpp"

#include <algorithm>

#include "modgraph/stabilize.hpp"

namespace modgraph {

namespace {

template <class T>
T uniform(Rng& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

MonoidElement random_element(Rng& rng, std::size_t rank, Coord max_entry) {
  std::vector<Coord> c(rank);
  for (auto& x : c) x = coin(rng, 0.6) ? 0 : uniform<Coord>(rng, 1, std::max<Coord>(1, max_entry));
  return MonoidElement(std::move(c));
}

}  // namespace

AGraph random_graph(Rng& rng, const RandomGraphOptions& opts) {
  const int budget_vertices =
      std::max(1, std::min(opts.max_vertices, static_cast<int>(opts.max_flags / 2) + 1));
  const int nv = uniform(rng, 1, budget_vertices);
  AGraph g(opts.rank);
  for (int v = 0; v < nv; ++v) {
    const int genus = coin(rng, 0.75) ? 0 : uniform(rng, 0, opts.max_genus);
    g.add_vertex(v, genus, random_element(rng, opts.rank, opts.max_class));
  }
  FlagId next = 0;
  auto room = [&](std::size_t k) { return g.num_flags() + k <= opts.max_flags; };
  for (int v = 1; v < nv; ++v) {
    if (!opts.connected && coin(rng, 0.3)) continue;
    if (!room(2)) break;
    g.add_edge(next, uniform(rng, 0, v - 1), next + 1, v);
    next += 2;
  }
  const int extra = uniform(rng, 0, static_cast<int>(opts.max_flags));
  for (int i = 0; i < extra && room(1); ++i) {
    if (room(2) && coin(rng, 0.35)) {
      g.add_edge(next, uniform(rng, 0, nv - 1), next + 1, uniform(rng, 0, nv - 1));
      next += 2;
    } else if (coin(rng, 0.6)) {
      g.add_tail(next++, uniform(rng, 0, nv - 1));
    }
  }
  if (opts.stable) {
    for (int v = 0; v < nv; ++v) {
      while (!is_stable_vertex(g, v)) {
        if (room(1) && coin(rng, 0.7)) {
          g.add_tail(next++, v);
        } else if (opts.rank > 0 && coin(rng)) {
          std::vector<Coord> c(opts.rank, 0);
          c[uniform<std::size_t>(rng, 0, opts.rank - 1)] = 1;
          g.set_class(v, MonoidElement(std::move(c)));
        } else {
          g.set_genus(v, g.genus_of(v) + 1);
        }
      }
    }
  }
  return g;
}

MonoidHom random_hom(Rng& rng, std::size_t source_rank, std::size_t target_rank, Coord max_entry) {
  std::vector<std::vector<Coord>> rows(target_rank, std::vector<Coord>(source_rank));
  for (auto& r : rows) {
    for (auto& x : r) x = uniform<Coord>(rng, 0, max_entry);
  }
  return MonoidHom(source_rank, std::move(rows));
}

Contraction random_contraction(Rng& rng, const AGraph& g, std::size_t min_edges,
                               std::size_t max_edges) {
  std::vector<Edge> all = edges(g);
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t hi = std::min(max_edges, all.size());
  const std::size_t lo = std::min(min_edges, hi);
  all.resize(uniform(rng, lo, hi));
  return contract_edges(g, all);
}

CombinatorialMorphism random_morphism_into(Rng& rng, const AGraph& tau, const MonoidHom& xi,
                                           int operations) {
  const AGraph start = push_classes(tau, xi);
  CombinatorialMorphism acc{start, tau, {}, {}, xi};
  for (const auto& [f, _] : start.flags()) acc.flag_map[f] = f;
  for (const auto& [v, _] : start.vertices()) acc.vertex_map[v] = v;

  for (int i = 0; i < operations; ++i) {
    const AGraph& cur = acc.source;
    const int op = uniform(rng, 0, 3);
    if (op == 0) {
      const auto es = edges(cur);
      if (es.empty()) continue;
      const BuiltMorphism b = cut_edge(cur, es[uniform<std::size_t>(rng, 0, es.size() - 1)].first);
      acc = compose(acc, b.morphism);
    } else if (op == 1) {
      const auto ts = tails(cur);
      if (ts.empty()) continue;
      const BuiltMorphism b = forget_tail(cur, ts[uniform<std::size_t>(rng, 0, ts.size() - 1)]);
      acc = compose(acc, b.morphism);
    } else if (op == 2) {
      auto comps = connected_components(cur);
      if (comps.size() < 2) continue;
      comps.erase(comps.begin() + uniform<std::size_t>(rng, 0, comps.size() - 1));
      std::vector<VertexId> keep;
      for (const auto& c : comps) keep.insert(keep.end(), c.begin(), c.end());
      const AGraph sub = induced_subgraph(cur, keep);
      acc = compose(acc, inclusion_morphism(sub, cur));
    } else {
      const auto comps = connected_components(cur);
      if (comps.empty() || cur.num_flags() > 8) continue;
      const AGraph piece = induced_subgraph(cur, comps[uniform<std::size_t>(rng, 0, comps.size() - 1)]);
      const DisjointUnion du = disjoint_union_with_maps(cur, piece);
      CombinatorialMorphism fold{du.graph, cur, {}, {}, MonoidHom::identity(cur.rank())};
      for (const auto& [f, g] : du.left_flags) fold.flag_map[g] = f;
      for (const auto& [f, g] : du.right_flags) fold.flag_map[g] = f;
      for (const auto& [v, w] : du.left_vertices) fold.vertex_map[w] = v;
      for (const auto& [v, w] : du.right_vertices) fold.vertex_map[w] = v;
      acc = compose(acc, fold);
    }
  }
  const Stabilization st = stabilize(acc.source);
  return compose(acc, st.morphism);
}

Isogeny random_isogeny(Rng& rng, const AGraph& tau, int steps) {
  Isogeny iso = identity_isogeny(tau);
  for (int i = 0; i < steps; ++i) {
    const AGraph cur = iso.target();
    const auto es = edges(cur);
    auto ts = tails(cur);
    std::shuffle(ts.begin(), ts.end(), rng);
    const bool contract = !es.empty() && (ts.empty() || coin(rng));
    if (contract) {
      add_contraction(iso, {es[uniform<std::size_t>(rng, 0, es.size() - 1)]});
      continue;
    }
    for (FlagId t : ts) {
      if (stably_forget_tail(cur, t).type != ForgetType::IV) {
        add_forget(iso, t);
        break;
      }
    }
  }
  return iso;
}

}  // namespace modgraph
