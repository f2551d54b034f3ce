#include "modgraph/morphism.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace modgraph {

namespace {

std::string str(int x) { return std::to_string(x); }

bool keys_match(const std::map<int, int>& m, const std::map<int, AGraph::Flag>& domain) {
  if (m.size() != domain.size()) return false;
  for (const auto& [k, _] : domain) {
    if (!m.count(k)) return false;
  }
  return true;
}

bool keys_match(const std::map<int, int>& m, const std::map<int, AGraph::Vertex>& domain) {
  if (m.size() != domain.size()) return false;
  for (const auto& [k, _] : domain) {
    if (!m.count(k)) return false;
  }
  return true;
}

std::set<FlagId> image_of(const std::map<FlagId, FlagId>& m) {
  std::set<FlagId> out;
  for (const auto& [_, v] : m) out.insert(v);
  return out;
}

}  // namespace

std::vector<Violation> check_contraction(const Contraction& c) {
  std::vector<Violation> out;
  const AGraph& s = c.source;
  const AGraph& t = c.target;
  if (s.rank() != t.rank()) {
    return {{"rank-mismatch", "source and target have different rank"}};
  }
  if (!keys_match(c.flag_map, t.flags())) {
    out.push_back({"map-total", "flag map must be defined exactly on the target's flags"});
  }
  if (!keys_match(c.vertex_map, s.vertices())) {
    out.push_back({"map-total", "vertex map must be defined exactly on the source's vertices"});
  }
  for (const auto& [h, f] : c.flag_map) {
    if (!s.has_flag(f)) out.push_back({"map-total", "flag " + str(h) + " maps to unknown flag " + str(f)});
  }
  for (const auto& [v, w] : c.vertex_map) {
    if (!t.has_vertex(w)) out.push_back({"map-total", "vertex " + str(v) + " maps to unknown vertex " + str(w)});
  }
  if (!out.empty()) return out;

  const std::set<FlagId> image = image_of(c.flag_map);
  if (image.size() != c.flag_map.size()) out.push_back({"doc-1", "flag map is not injective"});
  std::set<VertexId> hit;
  for (const auto& [_, w] : c.vertex_map) hit.insert(w);
  if (hit.size() != t.num_vertices()) out.push_back({"doc-1", "vertex map is not surjective"});

  for (const auto& [h, f] : c.flag_map) {
    if (c.vertex_map.at(s.boundary(f)) != t.boundary(h)) {
      out.push_back({"doc-2", "boundary square fails at flag " + str(h)});
    }
    if (c.flag_map.at(t.involution(h)) != s.involution(f)) {
      out.push_back({"doc-3", "involution not preserved at flag " + str(h)});
    }
  }
  for (const auto& [f, fl] : s.flags()) {
    if (!image.count(f) && fl.partner == f) {
      out.push_back({"doc-4", "tail " + str(f) + " of the source is not hit"});
    }
  }

  // Fibers must be exactly the classes of the contracted-edge relation.
  std::map<VertexId, VertexId> root;
  for (const auto& [v, _] : s.vertices()) root[v] = v;
  auto find = [&](VertexId v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& [f, fl] : s.flags()) {
    if (image.count(f)) continue;
    VertexId a = find(fl.vertex), b = find(s.boundary(fl.partner));
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }
  std::map<VertexId, VertexId> class_image;
  std::map<VertexId, VertexId> image_class;
  for (const auto& [v, w] : c.vertex_map) {
    VertexId r = find(v);
    auto [it, fresh] = class_image.emplace(r, w);
    if (!fresh && it->second != w) {
      out.push_back({"doc-5", "vertex " + str(v) + " is joined by contracted edges to a vertex with another image"});
    }
    auto [jt, fresh2] = image_class.emplace(w, r);
    if (!fresh2 && jt->second != r) {
      out.push_back({"doc-5", "vertex " + str(w) + " receives two unconnected vertices"});
    }
  }
  if (!out.empty()) return out;

  for (const auto& [v, vx] : t.vertices()) {
    const AGraph sub = contracted_subgraph(c, v);
    long g = betti1(sub);
    MonoidElement cls = MonoidElement::zero(s.rank());
    for (const auto& [w, wx] : sub.vertices()) {
      g += wx.genus;
      cls += wx.cls;
    }
    if (g != vx.genus) {
      out.push_back({"doc-genus", "vertex " + str(v) + " has genus " + str(vx.genus) +
                                      ", expected " + std::to_string(g)});
    }
    if (cls != vx.cls) {
      out.push_back({"doc-class", "vertex " + str(v) + " has class " + to_string(vx.cls) +
                                      ", expected " + to_string(cls)});
    }
  }
  return out;
}

std::vector<Edge> contracted_edges(const Contraction& c) {
  const std::set<FlagId> image = image_of(c.flag_map);
  std::vector<Edge> out;
  for (const Edge& e : edges(c.source)) {
    if (!image.count(e.first)) out.push_back(e);
  }
  return out;
}

bool is_elementary(const Contraction& c) { return contracted_edges(c).size() == 1; }

AGraph contracted_subgraph(const Contraction& c, VertexId v) {
  c.target.vertex(v);
  const std::set<FlagId> image = image_of(c.flag_map);
  AGraph out(c.source.rank());
  for (const auto& [w, target] : c.vertex_map) {
    if (target == v) {
      const auto& wx = c.source.vertex(w);
      out.add_vertex(w, wx.genus, wx.cls);
    }
  }
  for (const auto& [f, fl] : c.source.flags()) {
    if (!image.count(f) && out.has_vertex(fl.vertex)) out.add_tail(f, fl.vertex);
  }
  for (const auto& [f, fl] : c.source.flags()) {
    if (out.has_flag(f) && f < fl.partner && out.has_flag(fl.partner)) out.join(f, fl.partner);
  }
  return out;
}

Contraction identity_contraction(const AGraph& g) {
  Contraction c{g, g, {}, {}};
  for (const auto& [f, _] : g.flags()) c.flag_map[f] = f;
  for (const auto& [v, _] : g.vertices()) c.vertex_map[v] = v;
  return c;
}

Contraction contract_edges(const AGraph& g, const std::vector<Edge>& to_contract) {
  std::set<FlagId> removed;
  for (const Edge& e : to_contract) {
    if (!g.has_flag(e.first) || !g.has_flag(e.second) || g.involution(e.first) != e.second ||
        e.first == e.second) {
      throw_domain("not-an-edge", "{" + str(e.first) + "," + str(e.second) + "} is not an edge");
    }
    removed.insert(e.first);
    removed.insert(e.second);
  }
  std::map<VertexId, VertexId> root;
  for (const auto& [v, _] : g.vertices()) root[v] = v;
  auto find = [&](VertexId v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (FlagId f : removed) {
    VertexId a = find(g.boundary(f)), b = find(g.boundary(g.involution(f)));
    if (a != b) root[std::max(a, b)] = std::min(a, b);
  }

  Contraction c{g, AGraph(g.rank()), {}, {}};
  std::map<VertexId, int> genus;
  std::map<VertexId, MonoidElement> cls;
  std::map<VertexId, long> fiber_size, fiber_edges;
  for (const auto& [v, vx] : g.vertices()) {
    const VertexId r = find(v);
    c.vertex_map[v] = r;
    genus[r] += vx.genus;
    auto [it, fresh] = cls.emplace(r, vx.cls);
    if (!fresh) it->second += vx.cls;
    ++fiber_size[r];
  }
  for (FlagId f : removed) {
    if (f < g.involution(f)) ++fiber_edges[find(g.boundary(f))];
  }
  for (const auto& [r, n] : fiber_size) {
    const long h1 = fiber_edges[r] - n + 1;
    c.target.add_vertex(r, genus[r] + static_cast<int>(h1), cls.at(r));
  }
  for (const auto& [f, fl] : g.flags()) {
    if (removed.count(f)) continue;
    c.target.add_tail(f, c.vertex_map.at(fl.vertex));
    c.flag_map[f] = f;
  }
  for (const auto& [f, fl] : g.flags()) {
    if (!removed.count(f) && f < fl.partner) c.target.join(f, fl.partner);
  }
  return c;
}

std::vector<Contraction> decompose_elementary(const Contraction& c) {
  return decompose_elementary(c, contracted_edges(c));
}

std::vector<Contraction> decompose_elementary(const Contraction& c,
                                              const std::vector<Edge>& order) {
  require_valid("invalid contraction", check_contraction(c));
  std::vector<Edge> todo = order;
  for (Edge& e : todo) {
    if (e.second < e.first) std::swap(e.first, e.second);
  }
  {
    std::vector<Edge> sorted = todo;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != contracted_edges(c)) {
      throw_domain("edge-order", "order must list each contracted edge exactly once");
    }
  }
  std::vector<Contraction> out;
  AGraph current = c.source;
  for (const Edge& e : todo) {
    out.push_back(contract_edges(current, {e}));
    current = out.back().target;
  }
  if (out.empty()) return out;

  // Rename the last target onto c.target's ids.
  Contraction& last = out.back();
  std::map<FlagId, FlagId> flag_rename;  // current id -> c.target id
  for (const auto& [h, f] : c.flag_map) flag_rename[f] = h;
  std::map<VertexId, VertexId> vertex_rename;
  for (const auto& [v, _] : last.target.vertices()) vertex_rename[v] = c.vertex_map.at(v);
  AGraph renamed(c.target.rank());
  for (const auto& [v, vx] : last.target.vertices()) renamed.add_vertex(vertex_rename.at(v), vx.genus, vx.cls);
  for (const auto& [f, fl] : last.target.flags()) renamed.add_tail(flag_rename.at(f), vertex_rename.at(fl.vertex));
  for (const auto& [f, fl] : last.target.flags()) {
    if (f < fl.partner) renamed.join(flag_rename.at(f), flag_rename.at(fl.partner));
  }
  std::map<FlagId, FlagId> fm;
  for (const auto& [h, f] : last.flag_map) fm[flag_rename.at(h)] = f;
  for (auto& [v, w] : last.vertex_map) w = vertex_rename.at(w);
  last.flag_map = std::move(fm);
  last.target = std::move(renamed);
  return out;
}

Contraction compose(const Contraction& second, const Contraction& first) {
  if (!(first.target == second.source)) {
    throw_domain("endpoint-mismatch", "contractions are not composable");
  }
  Contraction c{first.source, second.target, {}, {}};
  for (const auto& [h, f] : second.flag_map) c.flag_map[h] = first.flag_map.at(f);
  for (const auto& [v, w] : first.vertex_map) c.vertex_map[v] = second.vertex_map.at(w);
  return c;
}

std::vector<Violation> check_combinatorial(const CombinatorialMorphism& a) {
  std::vector<Violation> out;
  const AGraph& s = a.source;
  const AGraph& t = a.target;
  if (a.xi.source_rank() != t.rank() || a.xi.target_rank() != s.rank()) {
    return {{"rank-mismatch", "xi must map the target's monoid to the source's"}};
  }
  if (!keys_match(a.flag_map, s.flags())) {
    out.push_back({"map-total", "flag map must be defined exactly on the source's flags"});
  }
  if (!keys_match(a.vertex_map, s.vertices())) {
    out.push_back({"map-total", "vertex map must be defined exactly on the source's vertices"});
  }
  for (const auto& [f, h] : a.flag_map) {
    if (!t.has_flag(h)) out.push_back({"map-total", "flag " + str(f) + " maps to unknown flag " + str(h)});
  }
  for (const auto& [v, w] : a.vertex_map) {
    if (!t.has_vertex(w)) out.push_back({"map-total", "vertex " + str(v) + " maps to unknown vertex " + str(w)});
  }
  if (!out.empty()) return out;

  for (const auto& [f, fl] : s.flags()) {
    if (t.boundary(a.flag_map.at(f)) != a.vertex_map.at(fl.vertex)) {
      out.push_back({"commor-1", "boundary square fails at flag " + str(f)});
    }
  }
  for (const auto& [v, _] : s.vertices()) {
    std::set<FlagId> seen;
    for (FlagId f : flags_at(s, v)) {
      if (!seen.insert(a.flag_map.at(f)).second) {
        out.push_back({"commor-2", "flags at vertex " + str(v) + " collide"});
        break;
      }
    }
  }
  const FlagPartition ps = flag_partition(s);
  const FlagPartition pt = flag_partition(push_classes(t, a.xi));
  for (const auto& block : ps.blocks()) {
    const std::size_t b = pt.block_of(a.flag_map.at(block.front()));
    for (FlagId f : block) {
      if (pt.block_of(a.flag_map.at(f)) != b) {
        out.push_back({"commor-3", "flags " + str(block.front()) + " and " + str(f) +
                                       " are equivalent but their images are not"});
        break;
      }
    }
  }
  for (const auto& [v, vx] : s.vertices()) {
    const VertexId w = a.vertex_map.at(v);
    if (a.xi(t.class_of(w)) != vx.cls) {
      out.push_back({"commor-4", "class of vertex " + str(v) + " differs from the pulled-back class of " + str(w)});
    }
    if (t.genus_of(w) != vx.genus) {
      out.push_back({"commor-5", "genus of vertex " + str(v) + " differs from genus of " + str(w)});
    }
  }
  return out;
}

bool is_complete(const CombinatorialMorphism& a) {
  for (const auto& [v, w] : a.vertex_map) {
    if (valence(a.source, v) != valence(a.target, w)) return false;
  }
  return true;
}

CombinatorialMorphism identity_morphism(const AGraph& g) { return inclusion_morphism(g, g); }

CombinatorialMorphism inclusion_morphism(const AGraph& source, const AGraph& target) {
  CombinatorialMorphism a{source, target, {}, {}, MonoidHom::identity(target.rank())};
  for (const auto& [f, _] : source.flags()) a.flag_map[f] = f;
  for (const auto& [v, _] : source.vertices()) a.vertex_map[v] = v;
  return a;
}

CombinatorialMorphism compose(const CombinatorialMorphism& second,
                              const CombinatorialMorphism& first) {
  if (!(first.target == second.source)) {
    throw_domain("endpoint-mismatch", "combinatorial morphisms are not composable");
  }
  CombinatorialMorphism c{first.source, second.target, {}, {}, compose(first.xi, second.xi)};
  for (const auto& [f, h] : first.flag_map) c.flag_map[f] = second.flag_map.at(h);
  for (const auto& [v, w] : first.vertex_map) c.vertex_map[v] = second.vertex_map.at(w);
  return c;
}

BuiltMorphism cut_edge(const AGraph& g, FlagId f) {
  if (!g.has_flag(f) || g.is_tail(f)) throw_domain("not-an-edge", "flag " + str(f) + " is not part of an edge");
  AGraph sigma = g;
  sigma.split(f);
  return {sigma, inclusion_morphism(sigma, g)};
}

BuiltMorphism forget_tail(const AGraph& g, FlagId f) {
  if (!g.has_flag(f) || !g.is_tail(f)) throw_domain("not-a-tail", "flag " + str(f) + " is not a tail");
  AGraph sigma = g;
  sigma.remove_flag(f);
  return {sigma, inclusion_morphism(sigma, g)};
}

BuiltMorphism glue_tails(const AGraph& g, FlagId f, FlagId h) {
  if (f == h || !g.has_flag(f) || !g.has_flag(h) || !g.is_tail(f) || !g.is_tail(h)) {
    throw_domain("not-a-tail", "gluing needs two distinct tails");
  }
  AGraph sigma = g;
  sigma.join(f, h);
  return {sigma, inclusion_morphism(g, sigma)};
}

}  // namespace modgraph

namespace modgraph {

namespace {

class MorphismSearch {
 public:
  MorphismSearch(const AGraph& s, const AGraph& t, const MonoidHom& xi)
      : s_(s), t_(t), xi_(xi), vs_(vertex_ids(s)), vt_(vertex_ids(t)) {}

  std::vector<CombinatorialMorphism> run() {
    assign_vertex(0);
    return std::move(found_);
  }

 private:
  void assign_vertex(std::size_t i) {
    if (i == vs_.size()) {
      assign_flags(0);
      return;
    }
    const VertexId v = vs_[i];
    const auto& vx = s_.vertex(v);
    for (VertexId w : vt_) {
      if (t_.genus_of(w) != vx.genus || xi_(t_.class_of(w)) != vx.cls) continue;
      if (valence(t_, w) < valence(s_, v)) continue;
      current_.vertex_map[v] = w;
      assign_vertex(i + 1);
    }
    current_.vertex_map.erase(v);
  }

  void assign_flags(std::size_t i) {
    if (i == vs_.size()) {
      CombinatorialMorphism a{s_, t_, current_.flag_map, current_.vertex_map, xi_};
      if (check_combinatorial(a).empty()) found_.push_back(std::move(a));
      return;
    }
    const VertexId v = vs_[i];
    assign_local(flags_at(s_, v), 0, flags_at(t_, current_.vertex_map.at(v)), {}, i);
  }

  void assign_local(const std::vector<FlagId>& src, std::size_t k,
                    const std::vector<FlagId>& dst, std::set<FlagId> used, std::size_t i) {
    if (k == src.size()) {
      assign_flags(i + 1);
      return;
    }
    for (FlagId h : dst) {
      if (used.count(h)) continue;
      current_.flag_map[src[k]] = h;
      used.insert(h);
      assign_local(src, k + 1, dst, used, i);
      used.erase(h);
    }
    current_.flag_map.erase(src[k]);
  }

  const AGraph& s_;
  const AGraph& t_;
  const MonoidHom& xi_;
  std::vector<VertexId> vs_, vt_;
  struct {
    std::map<FlagId, FlagId> flag_map;
    std::map<VertexId, VertexId> vertex_map;
  } current_;
  std::vector<CombinatorialMorphism> found_;
};

}  // namespace

std::vector<CombinatorialMorphism> enumerate_combinatorial_morphisms(
    const AGraph& source, const AGraph& target, const MonoidHom& xi) {
  if (xi.source_rank() != target.rank() || xi.target_rank() != source.rank()) {
    throw_domain("rank-mismatch", "xi must map the target's monoid to the source's");
  }
  return MorphismSearch(source, target, xi).run();
}

}  // namespace modgraph
