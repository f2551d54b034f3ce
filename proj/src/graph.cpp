#include "modgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace modgraph {

namespace {

[[noreturn]] void misuse(const std::string& message) {
  throw Error(ErrorKind::domain, message, {{"graph-builder", message}});
}

// Small union-find over dense indices.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

const AGraph::Vertex& AGraph::vertex(VertexId v) const {
  auto it = vertices_.find(v);
  if (it == vertices_.end()) {
    throw Error(ErrorKind::domain, "unknown vertex " + std::to_string(v),
                {{"unknown-vertex", std::to_string(v)}});
  }
  return it->second;
}

const AGraph::Flag& AGraph::flag(FlagId f) const {
  auto it = flags_.find(f);
  if (it == flags_.end()) {
    throw Error(ErrorKind::domain, "unknown flag " + std::to_string(f),
                {{"unknown-flag", std::to_string(f)}});
  }
  return it->second;
}

FlagId AGraph::max_flag_id() const {
  return flags_.empty() ? -1 : flags_.rbegin()->first;
}

VertexId AGraph::max_vertex_id() const {
  return vertices_.empty() ? -1 : vertices_.rbegin()->first;
}

void AGraph::add_vertex(VertexId v, int genus, MonoidElement cls) {
  if (genus < 0) misuse("negative genus");
  if (cls.rank() != rank_) misuse("class rank differs from graph rank");
  if (!vertices_.emplace(v, Vertex{genus, std::move(cls)}).second) {
    misuse("duplicate vertex " + std::to_string(v));
  }
}

void AGraph::add_vertex(VertexId v, int genus) {
  add_vertex(v, genus, MonoidElement::zero(rank_));
}

void AGraph::add_tail(FlagId f, VertexId v) {
  if (!has_vertex(v)) misuse("tail on unknown vertex");
  if (!flags_.emplace(f, Flag{v, f}).second) {
    misuse("duplicate flag " + std::to_string(f));
  }
}

void AGraph::add_edge(FlagId f, VertexId v, FlagId g, VertexId w) {
  if (f == g) misuse("edge needs two distinct flags");
  add_tail(f, v);
  add_tail(g, w);
  join(f, g);
}

void AGraph::set_genus(VertexId v, int genus) {
  if (genus < 0) misuse("negative genus");
  vertices_.at(v).genus = genus;
}

void AGraph::set_class(VertexId v, MonoidElement cls) {
  if (cls.rank() != rank_) misuse("class rank differs from graph rank");
  vertices_.at(v).cls = std::move(cls);
}

void AGraph::join(FlagId f, FlagId g) {
  if (f == g || !is_tail(f) || !is_tail(g)) misuse("join needs two tails");
  flags_.at(f).partner = g;
  flags_.at(g).partner = f;
}

void AGraph::split(FlagId f) {
  FlagId g = involution(f);
  if (g == f) misuse("split needs an edge flag");
  flags_.at(f).partner = f;
  flags_.at(g).partner = g;
}

void AGraph::remove_flag(FlagId f) {
  FlagId g = involution(f);
  if (g != f) flags_.at(g).partner = g;
  flags_.erase(f);
}

void AGraph::remove_vertex(VertexId v) {
  vertex(v);
  for (const auto& [id, fl] : flags_) {
    if (fl.vertex == v) misuse("vertex still has flags");
  }
  vertices_.erase(v);
}

void AGraph::move_flag(FlagId f, VertexId v) {
  vertex(v);
  flags_.at(f).vertex = v;
}

std::vector<Violation> check_graph(const GraphParts& parts) {
  std::vector<Violation> out;
  std::set<VertexId> vs;
  for (const auto& rec : parts.vertices) {
    if (!vs.insert(rec.id).second) {
      out.push_back({"vertex-duplicate", "vertex " + std::to_string(rec.id)});
    }
    if (rec.genus < 0) {
      out.push_back({"genus-nonneg", "vertex " + std::to_string(rec.id)});
    }
    if (rec.cls.size() != parts.rank) {
      out.push_back({"class-rank", "vertex " + std::to_string(rec.id)});
    }
    if (std::any_of(rec.cls.begin(), rec.cls.end(),
                    [](Coord c) { return c < 0; })) {
      out.push_back({"class-nonneg", "vertex " + std::to_string(rec.id)});
    }
  }
  std::set<FlagId> fs;
  for (FlagId f : parts.flags) {
    if (!fs.insert(f).second) {
      out.push_back({"flag-duplicate", "flag " + std::to_string(f)});
    }
  }
  for (FlagId f : fs) {
    auto it = parts.boundary.find(f);
    if (it == parts.boundary.end()) {
      out.push_back({"boundary-total", "flag " + std::to_string(f) +
                                           " has no boundary vertex"});
    } else if (!vs.count(it->second)) {
      out.push_back({"boundary-range", "flag " + std::to_string(f) +
                                           " attached to unknown vertex"});
    }
  }
  for (const auto& [f, v] : parts.boundary) {
    if (!fs.count(f)) {
      out.push_back({"boundary-range", "boundary given for unknown flag " +
                                           std::to_string(f)});
    }
  }
  for (const auto& [f, g] : parts.involution) {
    if (!fs.count(f) || !fs.count(g)) {
      out.push_back({"j-range", "involution mentions unknown flag " +
                                    std::to_string(fs.count(f) ? g : f)});
      continue;
    }
    auto back = parts.involution.find(g);
    FlagId gg = back == parts.involution.end() ? g : back->second;
    if (gg != f) {
      out.push_back({"j-involution", "j(j(" + std::to_string(f) +
                                         ")) != " + std::to_string(f)});
    }
  }
  return out;
}

AGraph build_graph(const GraphParts& parts) {
  require_valid("invalid graph", check_graph(parts));
  AGraph g(parts.rank);
  for (const auto& rec : parts.vertices) {
    g.add_vertex(rec.id, static_cast<int>(rec.genus), MonoidElement(rec.cls));
  }
  for (FlagId f : parts.flags) g.add_tail(f, parts.boundary.at(f));
  for (const auto& [f, h] : parts.involution) {
    if (f < h) g.join(f, h);
  }
  return g;
}

std::vector<FlagId> tails(const AGraph& g) {
  std::vector<FlagId> out;
  for (const auto& [f, fl] : g.flags()) {
    if (fl.partner == f) out.push_back(f);
  }
  return out;
}

std::vector<Edge> edges(const AGraph& g) {
  std::vector<Edge> out;
  for (const auto& [f, fl] : g.flags()) {
    if (f < fl.partner) out.push_back({f, fl.partner});
  }
  return out;
}

std::size_t valence(const AGraph& g, VertexId v) {
  g.vertex(v);
  std::size_t n = 0;
  for (const auto& [f, fl] : g.flags()) n += fl.vertex == v;
  return n;
}

std::vector<FlagId> flags_at(const AGraph& g, VertexId v) {
  g.vertex(v);
  std::vector<FlagId> out;
  for (const auto& [f, fl] : g.flags()) {
    if (fl.vertex == v) out.push_back(f);
  }
  return out;
}

std::vector<VertexId> vertex_ids(const AGraph& g) {
  std::vector<VertexId> out;
  for (const auto& [v, _] : g.vertices()) out.push_back(v);
  return out;
}

std::vector<FlagId> flag_ids(const AGraph& g) {
  std::vector<FlagId> out;
  for (const auto& [f, _] : g.flags()) out.push_back(f);
  return out;
}

Edge edge_of(const AGraph& g, FlagId f) {
  FlagId h = g.involution(f);
  if (h == f) throw_domain("not-an-edge", "flag " + std::to_string(f) + " is a tail");
  return {std::min(f, h), std::max(f, h)};
}

bool is_loop(const AGraph& g, FlagId f) {
  FlagId h = g.involution(f);
  return h != f && g.boundary(h) == g.boundary(f);
}

std::vector<std::vector<VertexId>> connected_components(const AGraph& g) {
  std::vector<VertexId> ids = vertex_ids(g);
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  UnionFind uf(ids.size());
  for (const auto& [f, fl] : g.flags()) {
    uf.unite(index[fl.vertex], index[g.boundary(fl.partner)]);
  }
  std::map<std::size_t, std::vector<VertexId>> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[uf.find(i)].push_back(ids[i]);
  std::vector<std::vector<VertexId>> out;
  for (auto& [_, members] : groups) out.push_back(std::move(members));
  return out;
}

long betti1(const AGraph& g) {
  return static_cast<long>(edges(g).size()) -
         static_cast<long>(g.num_vertices()) +
         static_cast<long>(connected_components(g).size());
}

long euler_characteristic(const AGraph& g) {
  long chi = static_cast<long>(connected_components(g).size()) - betti1(g);
  for (const auto& [_, vx] : g.vertices()) chi -= vx.genus;
  return chi;
}

long genus(const AGraph& g) {
  if (connected_components(g).size() != 1) {
    throw_domain("genus-connected",
                 "genus is defined only for non-empty connected graphs");
  }
  return 1 - euler_characteristic(g);
}

MonoidElement total_class(const AGraph& g) {
  MonoidElement sum = MonoidElement::zero(g.rank());
  for (const auto& [_, vx] : g.vertices()) sum += vx.cls;
  return sum;
}

bool is_stable_vertex(const AGraph& g, VertexId v) {
  const auto& vx = g.vertex(v);
  return !vx.cls.is_zero() ||
         2 * vx.genus + static_cast<long>(valence(g, v)) >= 3;
}

bool is_stable(const AGraph& g) {
  for (const auto& [v, _] : g.vertices()) {
    if (!is_stable_vertex(g, v)) return false;
  }
  return true;
}

bool is_forest(const AGraph& g) {
  if (betti1(g) != 0) return false;
  for (const auto& [_, vx] : g.vertices()) {
    if (vx.genus != 0) return false;
  }
  return true;
}

FlagPartition::FlagPartition(std::vector<std::vector<FlagId>> blocks)
    : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (FlagId f : blocks_[i]) index_[f] = i;
  }
}

std::size_t FlagPartition::block_of(FlagId f) const {
  auto it = index_.find(f);
  if (it == index_.end()) {
    throw Error(ErrorKind::domain, "flag not in partition",
                {{"unknown-flag", std::to_string(f)}});
  }
  return it->second;
}

FlagPartition flag_partition(const AGraph& g) {
  std::vector<FlagId> ids = flag_ids(g);
  std::map<FlagId, std::size_t> index;
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
  UnionFind uf(ids.size());
  std::map<VertexId, std::size_t> first_at_special;
  for (const auto& [f, fl] : g.flags()) {
    uf.unite(index[f], index[fl.partner]);
    const auto& vx = g.vertex(fl.vertex);
    if (vx.genus == 0 && vx.cls.is_zero()) {
      auto [it, inserted] = first_at_special.emplace(fl.vertex, index[f]);
      if (!inserted) uf.unite(it->second, index[f]);
    }
  }
  std::map<std::size_t, std::vector<FlagId>> groups;
  for (std::size_t i = 0; i < ids.size(); ++i) groups[uf.find(i)].push_back(ids[i]);
  std::vector<std::vector<FlagId>> blocks;
  for (auto& [_, members] : groups) blocks.push_back(std::move(members));
  return FlagPartition(std::move(blocks));
}

DisjointUnion disjoint_union_with_maps(const AGraph& left, const AGraph& right) {
  if (left.rank() != right.rank()) {
    throw Error(ErrorKind::domain, "disjoint union of graphs of different rank",
                {{"rank-mismatch", "disjoint_union"}});
  }
  DisjointUnion out{left, {}, {}, {}, {}};
  for (const auto& [v, _] : left.vertices()) out.left_vertices[v] = v;
  for (const auto& [f, _] : left.flags()) out.left_flags[f] = f;
  const VertexId vshift =
      left.vertices().empty() || right.vertices().empty()
          ? 0
          : left.max_vertex_id() + 1 - right.vertices().begin()->first;
  const FlagId fshift =
      left.flags().empty() || right.flags().empty()
          ? 0
          : left.max_flag_id() + 1 - right.flags().begin()->first;
  for (const auto& [v, vx] : right.vertices()) {
    out.right_vertices[v] = v + vshift;
    out.graph.add_vertex(v + vshift, vx.genus, vx.cls);
  }
  for (const auto& [f, fl] : right.flags()) {
    out.right_flags[f] = f + fshift;
    out.graph.add_tail(f + fshift, fl.vertex + vshift);
  }
  for (const auto& [f, fl] : right.flags()) {
    if (f < fl.partner) out.graph.join(f + fshift, fl.partner + fshift);
  }
  return out;
}

AGraph disjoint_union(const AGraph& left, const AGraph& right) {
  return disjoint_union_with_maps(left, right).graph;
}

AGraph push_classes(const AGraph& g, const MonoidHom& xi) {
  if (xi.source_rank() != g.rank()) {
    throw Error(ErrorKind::domain, "hom source rank differs from graph rank",
                {{"rank-mismatch", "push_classes"}});
  }
  AGraph out(xi.target_rank());
  for (const auto& [v, vx] : g.vertices()) out.add_vertex(v, vx.genus, xi(vx.cls));
  for (const auto& [f, fl] : g.flags()) out.add_tail(f, fl.vertex);
  for (const auto& [f, fl] : g.flags()) {
    if (f < fl.partner) out.join(f, fl.partner);
  }
  return out;
}

AGraph induced_subgraph(const AGraph& g, const std::vector<VertexId>& vertices) {
  std::set<VertexId> keep(vertices.begin(), vertices.end());
  AGraph out(g.rank());
  for (VertexId v : keep) {
    const auto& vx = g.vertex(v);
    out.add_vertex(v, vx.genus, vx.cls);
  }
  for (const auto& [f, fl] : g.flags()) {
    if (keep.count(fl.vertex)) out.add_tail(f, fl.vertex);
  }
  for (const auto& [f, fl] : g.flags()) {
    if (f < fl.partner && out.has_flag(f) && out.has_flag(fl.partner)) {
      out.join(f, fl.partner);
    }
  }
  return out;
}

}  // namespace modgraph
