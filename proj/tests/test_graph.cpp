#include <doctest.h>

#include "fixtures.hpp"
#include "modgraph/random_graphs.hpp"
#include "oracles.hpp"

using namespace modgraph;
using namespace fixture;

TEST_CASE("tails, edges and valence") {
  const AGraph t = tripod();
  CHECK(tails(t).size() == 3);
  CHECK(edges(t).empty());
  CHECK(valence(t, 0) == 3);

  const AGraph l = loop_graph();
  CHECK(tails(l).empty());
  CHECK(edges(l).size() == 1);
  CHECK(valence(l, 0) == 2);

  const AGraph e;
  CHECK(tails(e).empty());
  CHECK(edges(e).empty());
}

TEST_CASE("builders enforce the involution") {
  AGraph g;
  g.add_vertex(0);
  g.add_tail(0, 0);
  CHECK_THROWS(g.add_tail(0, 0));
  CHECK_THROWS(g.add_tail(1, 5));
  CHECK_THROWS(g.remove_vertex(0));
  g.add_tail(1, 0);
  g.join(0, 1);
  CHECK(g.involution(0) == 1);
  g.split(1);
  CHECK(g.is_tail(0));
  CHECK(g.is_tail(1));
}

TEST_CASE("check_graph reports violations by id") {
  GraphParts p;
  p.vertices = {{0, 0, {}}};
  p.flags = {0, 1};
  p.boundary = {{0, 0}, {1, 0}};
  p.involution = {{0, 1}, {1, 1}};
  CHECK(has_violation(check_graph(p), "j-involution"));
  p.involution = {{0, 1}, {1, 0}};
  CHECK(check_graph(p).empty());
  p.boundary.erase(1);
  CHECK(has_violation(check_graph(p), "boundary-total"));
  p.boundary[1] = 4;
  CHECK(has_violation(check_graph(p), "boundary-range"));
  p.boundary[1] = 0;
  p.vertices.push_back({0, 1, {}});
  CHECK(has_violation(check_graph(p), "vertex-duplicate"));
  p.vertices.pop_back();
  p.vertices[0].genus = -1;
  CHECK(has_violation(check_graph(p), "genus-nonneg"));
  CHECK_THROWS_AS(build_graph(p), Error);
}

TEST_CASE("connected components") {
  CHECK(connected_components(two_vertex(0, 0, 1)).size() == 1);
  CHECK(connected_components(two_vertex(0, 0, 0)).size() == 2);
  CHECK(connected_components(AGraph()).empty());
}

TEST_CASE("first Betti number") {
  CHECK(betti1(loop_graph()) == 1);
  CHECK(betti1(boundary4()) == 0);
  CHECK(betti1(two_vertex(0, 0, 2)) == 1);
  CHECK(oracle::gf2_betti1(two_vertex(0, 0, 2)) == 1);
}

TEST_CASE("Euler characteristic and genus") {
  CHECK(euler_characteristic(star(3, 4)) == 1 - 4);
  CHECK(euler_characteristic(two_vertex(1, 2, 1)) == -2);
  CHECK(euler_characteristic(AGraph()) == 0);
  CHECK(genus(star(2, 5)) == 5);
  CHECK(genus(two_vertex(0, 0, 2)) == 1);
  CHECK(genus(loop_graph(1)) == 2);
  CHECK_THROWS(genus(two_vertex(0, 0, 0)));
}

TEST_CASE("total class") {
  CHECK(total_class(boundary4(1)).is_zero());
  CHECK(total_class(boundary4(1, 1, 2)) == cls({3}));
  CHECK(total_class(AGraph(1)) == cls({0}));
}

TEST_CASE("vertex stability") {
  CHECK_FALSE(is_stable_vertex(star(2), 0));
  CHECK(is_stable_vertex(star(2, 0, 1, 1), 0));
  CHECK(is_stable_vertex(star(1, 1), 0));
  CHECK(is_stable(tripod()));
  CHECK(is_stable(AGraph()));
}

TEST_CASE("flag partition") {
  CHECK(flag_partition(tripod()).blocks().size() == 1);
  CHECK(flag_partition(star(2, 1)).blocks().size() == 2);
  // tail 0 on a zero vertex, edge {1,2}, tail 3 on a genus-1 vertex
  AGraph chain;
  chain.add_vertex(0, 0);
  chain.add_vertex(1, 1);
  chain.add_tail(0, 0);
  chain.add_edge(1, 0, 2, 1);
  chain.add_tail(3, 1);
  const FlagPartition p = flag_partition(chain);
  CHECK(p.blocks().size() == 2);
  CHECK(p.same_block(0, 1));
  CHECK(p.same_block(1, 2));
  CHECK_FALSE(p.same_block(2, 3));
}

TEST_CASE("forests") {
  CHECK(is_forest(tripod()));
  CHECK_FALSE(is_forest(loop_graph()));
  CHECK_FALSE(is_forest(star(0, 1)));
  CHECK(is_forest(boundary4()));
}

TEST_CASE("disjoint union") {
  const AGraph t = tripod();
  CHECK(disjoint_union(t, AGraph()) == t);
  const AGraph tt = disjoint_union(t, t);
  CHECK(tt.num_vertices() == 2);
  CHECK(tails(tt).size() == 6);
  Rng rng(21);
  RandomGraphOptions opts;
  opts.max_flags = 8;
  for (int i = 0; i < 200; ++i) {
    const AGraph a = random_graph(rng, opts), b = random_graph(rng, opts);
    CHECK(euler_characteristic(disjoint_union(a, b)) == euler_characteristic(a) + euler_characteristic(b));
  }
}

TEST_CASE("betti1 matches the GF(2) oracle on random graphs") {
  Rng rng(22);
  RandomGraphOptions opts;
  opts.max_flags = 12;
  opts.max_vertices = 6;
  opts.connected = false;
  opts.stable = false;
  for (int i = 0; i < 300; ++i) {
    const AGraph g = random_graph(rng, opts);
    CHECK(betti1(g) == oracle::gf2_betti1(g));
    CHECK(connected_components(g).size() == oracle::component_count(g));
  }
}

TEST_CASE("induced subgraph and class pushing") {
  const AGraph b = boundary4(1, 1, 2);
  const AGraph half = induced_subgraph(b, {0});
  CHECK(half.num_vertices() == 1);
  CHECK(half.is_tail(4));
  const AGraph pushed = push_classes(b, MonoidHom::zero(1, 0));
  CHECK(pushed.rank() == 0);
  CHECK(pushed.class_of(1).rank() == 0);
}
