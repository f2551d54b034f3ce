#pragma once

// Modular graphs with A-structure, built from flags (half-edges).
//
// A graph is a set of flags F, a set of vertices V, a boundary map F -> V and
// an involution j on F. Fixed points of j are tails, two-element orbits are
// edges. Each vertex carries a genus and a class in N^k. A plain modular graph
// is an AGraph of rank 0; a plain graph additionally has all genera zero.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "modgraph/error.hpp"
#include "modgraph/semigroup.hpp"

namespace modgraph {

using FlagId = int;
using VertexId = int;

inline constexpr std::size_t kDefaultMaxFlags = 16;

// An edge as its two flags, `first < second`.
struct Edge {
  FlagId first;
  FlagId second;

  auto operator<=>(const Edge&) const = default;
};

class AGraph {
 public:
  struct Vertex {
    int genus = 0;
    MonoidElement cls;

    bool operator==(const Vertex&) const = default;
  };
  struct Flag {
    VertexId vertex;
    FlagId partner;  // == own id for a tail

    bool operator==(const Flag&) const = default;
  };

  explicit AGraph(std::size_t rank = 0) : rank_(rank) {}

  std::size_t rank() const noexcept { return rank_; }
  const std::map<VertexId, Vertex>& vertices() const noexcept {
    return vertices_;
  }
  const std::map<FlagId, Flag>& flags() const noexcept { return flags_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_flags() const noexcept { return flags_.size(); }
  bool empty() const noexcept { return vertices_.empty() && flags_.empty(); }

  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_flag(FlagId f) const { return flags_.count(f) != 0; }
  const Vertex& vertex(VertexId v) const;
  const Flag& flag(FlagId f) const;
  VertexId boundary(FlagId f) const { return flag(f).vertex; }
  FlagId involution(FlagId f) const { return flag(f).partner; }
  bool is_tail(FlagId f) const { return flag(f).partner == f; }
  int genus_of(VertexId v) const { return vertex(v).genus; }
  const MonoidElement& class_of(VertexId v) const { return vertex(v).cls; }

  FlagId max_flag_id() const;      // -1 if there are no flags
  VertexId max_vertex_id() const;  // -1 if there are no vertices

  // Builders. These keep j an involution and ∂ total; misuse throws.
  void add_vertex(VertexId v, int genus, MonoidElement cls);
  void add_vertex(VertexId v, int genus = 0);  // zero class
  void add_tail(FlagId f, VertexId v);
  void add_edge(FlagId f, VertexId v, FlagId g, VertexId w);
  void set_genus(VertexId v, int genus);
  void set_class(VertexId v, MonoidElement cls);
  // Joins two tails into an edge.
  void join(FlagId f, FlagId g);
  // Turns an edge into two tails.
  void split(FlagId f);
  // Removes a flag; its partner (if any) becomes a tail.
  void remove_flag(FlagId f);
  // Removes a vertex that has no flags left.
  void remove_vertex(VertexId v);
  // Moves a flag to another vertex.
  void move_flag(FlagId f, VertexId v);

  bool operator==(const AGraph&) const = default;

 private:
  std::size_t rank_ = 0;
  std::map<VertexId, Vertex> vertices_;
  std::map<FlagId, Flag> flags_;
};

// Unvalidated graph data as it arrives from outside (e.g. JSON).
struct GraphParts {
  std::size_t rank = 0;
  struct VertexRecord {
    VertexId id;
    long genus;
    std::vector<Coord> cls;
  };
  std::vector<VertexRecord> vertices;
  std::vector<FlagId> flags;
  std::map<FlagId, VertexId> boundary;
  std::map<FlagId, FlagId> involution;  // missing entries are tails
};

std::vector<Violation> check_graph(const GraphParts& parts);
// Builds the graph, throwing a domain error listing every violation.
AGraph build_graph(const GraphParts& parts);

std::vector<FlagId> tails(const AGraph& g);
std::vector<Edge> edges(const AGraph& g);
std::size_t valence(const AGraph& g, VertexId v);
std::vector<FlagId> flags_at(const AGraph& g, VertexId v);
std::vector<VertexId> vertex_ids(const AGraph& g);
std::vector<FlagId> flag_ids(const AGraph& g);
// The edge containing f, in normalized order.
Edge edge_of(const AGraph& g, FlagId f);
bool is_loop(const AGraph& g, FlagId f);

// Connected components of |g| as sorted vertex lists, ordered by their
// smallest vertex.
std::vector<std::vector<VertexId>> connected_components(const AGraph& g);

// Cycle rank #E - #V + #components.
long betti1(const AGraph& g);

// chi(|g|) - sum of genera, with chi(|g|) = #components - betti1.
long euler_characteristic(const AGraph& g);

// 1 - chi; requires |g| non-empty and connected.
long genus(const AGraph& g);

MonoidElement total_class(const AGraph& g);

bool is_stable_vertex(const AGraph& g, VertexId v);
bool is_stable(const AGraph& g);

// Tree level: no cycles and all genera zero.
bool is_forest(const AGraph& g);

// Partition of the flags generated by f ~ j(f) and by f ~ f' for flags on a
// common vertex of genus and class zero.
class FlagPartition {
 public:
  FlagPartition() = default;
  explicit FlagPartition(std::vector<std::vector<FlagId>> blocks);

  const std::vector<std::vector<FlagId>>& blocks() const noexcept {
    return blocks_;
  }
  std::size_t block_of(FlagId f) const;
  bool same_block(FlagId f, FlagId g) const {
    return block_of(f) == block_of(g);
  }

  bool operator==(const FlagPartition& other) const {
    return blocks_ == other.blocks_;
  }

 private:
  std::vector<std::vector<FlagId>> blocks_;
  std::map<FlagId, std::size_t> index_;
};

FlagPartition flag_partition(const AGraph& g);

// The disjoint union together with the id maps of both inputs. The ids of
// the left graph are kept; the right graph's ids are shifted past them.
struct DisjointUnion {
  AGraph graph;
  std::map<VertexId, VertexId> left_vertices, right_vertices;
  std::map<FlagId, FlagId> left_flags, right_flags;
};

DisjointUnion disjoint_union_with_maps(const AGraph& left, const AGraph& right);
AGraph disjoint_union(const AGraph& left, const AGraph& right);

// Copy of g with every class replaced by xi(class).
AGraph push_classes(const AGraph& g, const MonoidHom& xi);

// The subgraph on a set of vertices: those vertices, their flags, and j
// restricted (flags whose partner leaves the set become tails).
AGraph induced_subgraph(const AGraph& g, const std::vector<VertexId>& vertices);

}  // namespace modgraph
