#include <doctest.h>

#include "fixtures.hpp"
#include "modgraph/canonical.hpp"
#include "modgraph/enumerate.hpp"
#include "modgraph/isogeny.hpp"
#include "modgraph/pullback.hpp"
#include "modgraph/random_graphs.hpp"

using namespace modgraph;
using namespace fixture;

TEST_CASE("named profiles") {
  const VarietyProfile p2 = *named_profile("P2");
  CHECK(p2.dimension == 2);
  CHECK(p2.canonical(cls({1})) == -3);
  CHECK(named_profile("point")->rank == 0);
  CHECK_FALSE(named_profile("P9"));
  CHECK(check_profile(p2).empty());
  VarietyProfile bad = p2;
  bad.ample = LinearForm({0});
  CHECK_FALSE(check_profile(bad).empty());
}

TEST_CASE("dimension examples") {
  const VarietyProfile p2 = *named_profile("P2");
  for (Coord d = 0; d <= 3; ++d) CHECK(dim_graph(p2, star(3, 0, 1, d)) == 3 * d + 2);
  const VarietyProfile pt = point_profile();
  for (int g = 0; g <= 2; ++g) {
    for (int n = 3; n <= 5; ++n) CHECK(dim_graph(pt, star(n, g)) == 3 * g - 3 + n);
  }
  for (int r = 1; r <= 3; ++r) CHECK(dim_graph(projective_space(r), star(3, 0, 1, 0)) == r);
}

TEST_CASE("degree examples") {
  for (int r = 1; r <= 3; ++r) {
    for (Coord d = 0; d <= 3; ++d) {
      CHECK(deg_graph(projective_space(r), star(3, 0, 1, d)) == -d * (r + 1));
    }
  }
  const AGraph b = boundary4(1, 1, 2);
  CHECK(deg_graph(projective_space(2), b) == -9);
  CHECK_THROWS(dim_graph(projective_space(2), boundary4()));
}

TEST_CASE("stably forgetting a tail") {
  const StableForget one = stably_forget_tail(star(4), 3);
  CHECK(one.type == ForgetType::I);
  CHECK(is_isomorphic(one.graph, tripod()));
  CHECK(check_stable_forget(one).empty());

  // zero vertex with two tails and an edge to a genus-1 vertex
  AGraph g;
  g.add_vertex(0);
  g.add_vertex(1, 1);
  g.add_tail(0, 0);
  g.add_tail(1, 0);
  g.add_edge(2, 0, 3, 1);
  const StableForget two = stably_forget_tail(g, 0);
  CHECK(two.type == ForgetType::II);
  CHECK(two.graph.num_vertices() == 1);
  REQUIRE(two.tail_map.size() == 1);
  CHECK(two.tail_map.begin()->second == 1);
  CHECK(check_stable_forget(two).empty());

  const StableForget four = stably_forget_tail(disjoint_union(tripod(), star(1, 1)), 0);
  CHECK(four.type == ForgetType::IV);
  CHECK(four.graph.num_vertices() == 1);
  Isogeny iso = identity_isogeny(disjoint_union(tripod(), star(1, 1)));
  CHECK_THROWS_AS(add_forget(iso, 0), Error);
}

TEST_CASE("random stable forgets satisfy the definition") {
  Rng rng(71);
  RandomGraphOptions opts;
  opts.rank = 1;
  for (int i = 0; i < 200; ++i) {
    const AGraph g = random_graph(rng, opts);
    for (FlagId t : tails(g)) {
      const StableForget s = stably_forget_tail(g, t);
      CHECK(check_stable_forget(s).empty());
      CHECK(s.steps.size() <= 1);
      CHECK(is_stable(s.graph));
    }
  }
}

TEST_CASE("isogenies preserve the Euler characteristic") {
  Rng rng(72);
  RandomGraphOptions opts;
  opts.rank = 1;
  for (int i = 0; i < 150; ++i) {
    const AGraph g = random_graph(rng, opts);
    const Isogeny a = random_isogeny(rng, g, 3);
    CHECK(check_isogeny(a).empty());
    CHECK(euler_characteristic(a.target()) == euler_characteristic(g));
    const Isogeny b = random_isogeny(rng, a.target(), 2);
    const Isogeny ab = compose(b, a);
    CHECK(check_isogeny(ab).empty());
    CHECK(ab.target() == b.target());
    CHECK(euler_characteristic(ab.target()) == euler_characteristic(g));
    const MarkedMorphism m = to_marked(ab);
    CHECK(check_marked(m).empty());
    CHECK(m.source() == g);
    CHECK(m.target() == ab.target());
    for (const auto& [t, s] : tail_map(ab)) {
      CHECK(ab.target().is_tail(t));
      CHECK(g.is_tail(s));
    }
  }
}

TEST_CASE("composition with the identity isogeny") {
  const Isogeny c = [] {
    Isogeny i = identity_isogeny(boundary4());
    add_contraction(i, {{4, 5}});
    return i;
  }();
  const Isogeny left = compose(identity_isogeny(c.target()), c);
  const Isogeny right = compose(c, identity_isogeny(c.source));
  CHECK(left.target() == c.target());
  CHECK(right.target() == c.target());
  CHECK(tail_map(left) == tail_map(c));
}

TEST_CASE("isogeny then cut regains an edge") {
  Isogeny c = identity_isogeny(boundary4());
  add_contraction(c, {{4, 5}});
  const ExtendedIsogeny first = extend(c);
  const ExtendedIsogeny second = gluing(c.target(), {{1, 2}});
  const ExtendedIsogeny both = compose_extended(second, first);
  CHECK(check_extended(both).empty());
  CHECK(both.source == boundary4());
  CHECK(edges(both.isogeny.source).size() == 2);
  CHECK(both.target() == second.target());
}

TEST_CASE("random extended compositions") {
  Rng rng(73);
  RandomGraphOptions opts;
  opts.rank = 1;
  int done = 0;
  for (int i = 0; i < 200; ++i) {
    const AGraph g = random_graph(rng, opts);
    const ExtendedIsogeny first = extend(random_isogeny(rng, g, 2));
    const auto ts = tails(first.target());
    if (ts.size() < 2) continue;
    const ExtendedIsogeny glue = gluing(first.target(), {{ts[0], ts[1]}});
    const ExtendedIsogeny second = compose_extended(extend(random_isogeny(rng, glue.target(), 1)), glue);
    const ExtendedIsogeny both = compose_extended(second, first);
    CHECK(check_extended(both).empty());
    CHECK(both.target() == second.target());
    CHECK(euler_characteristic(both.isogeny.source) == euler_characteristic(both.target()));
    ++done;
  }
  CHECK(done > 50);
}

TEST_CASE("admissible members are closed under isogeny sources") {
  Rng rng(74);
  RandomGraphOptions opts;
  opts.rank = 1;
  const VarietyProfile p1 = projective_space(1);
  for (int i = 0; i < 200; ++i) {
    const AGraph g = random_graph(rng, opts);
    const ExtendedIsogeny phi = extend(random_isogeny(rng, g, 2));
    for (const AdmissibilityFilter& f : {AdmissibilityFilter(ForestFilter{}), AdmissibilityFilter(DegreeBound{3})}) {
      if (is_admissible_member(p1, phi.target(), f)) CHECK(is_admissible_member(p1, phi.source, f));
    }
  }
}
