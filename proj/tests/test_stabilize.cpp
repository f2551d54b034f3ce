#include <doctest.h>

#include "fixtures.hpp"
#include "modgraph/canonical.hpp"
#include "modgraph/random_graphs.hpp"
#include "modgraph/stabilize.hpp"

using namespace modgraph;
using namespace fixture;

namespace {

// Zero vertex 0 with tail 0 and flag 1 joined to flag 2 on genus-1 vertex 1,
// which also carries tail 3.
AGraph case_two() {
  AGraph g;
  g.add_vertex(0, 0);
  g.add_vertex(1, 1);
  g.add_tail(0, 0);
  g.add_edge(1, 0, 2, 1);
  g.add_tail(3, 1);
  return g;
}

}  // namespace

TEST_CASE("stable graphs are their own stabilization") {
  const Stabilization st = stabilize(boundary4());
  CHECK(st.graph == boundary4());
  CHECK(st.steps.empty());
  CHECK(st.morphism == identity_morphism(boundary4()));
}

TEST_CASE("case II removes the bivalent vertex") {
  const AGraph g = case_two();
  CHECK(stabilize_case(g, 0) == StabilizeCase::II);
  const Stabilization st = stabilize(g);
  REQUIRE(st.steps.size() == 1);
  CHECK(st.steps[0].kind == StabilizeCase::II);
  CHECK(st.graph.num_vertices() == 1);
  CHECK(st.graph.genus_of(1) == 1);
  CHECK(tails(st.graph).size() == 2);
  CHECK(st.graph.is_tail(2));
  CHECK(check_combinatorial(st.morphism).empty());
}

TEST_CASE("case IV removes an isolated unstable vertex") {
  const Stabilization st = stabilize(star(2));
  CHECK(st.graph.empty());
  REQUIRE(st.steps.size() == 1);
  CHECK(st.steps[0].kind == StabilizeCase::IV);
}

TEST_CASE("case I prunes a leaf vertex and a loop falls to case IV") {
  AGraph g = tripod();
  g.add_vertex(1, 0);
  g.remove_flag(2);
  g.add_edge(2, 0, 4, 1);
  CHECK(stabilize_case(g, 1) == StabilizeCase::I);
  CHECK(stabilize_case(loop_graph(), 0) == StabilizeCase::IV);
  CHECK(stabilize(loop_graph()).graph.empty());
}

TEST_CASE("case III joins the two neighbours") {
  AGraph g;
  g.add_vertex(0, 1);
  g.add_vertex(1, 0);
  g.add_vertex(2, 1);
  g.add_tail(0, 0);
  g.add_edge(1, 0, 2, 1);
  g.add_edge(3, 1, 4, 2);
  g.add_tail(5, 2);
  CHECK(stabilize_case(g, 1) == StabilizeCase::III);
  const Stabilization st = stabilize(g);
  CHECK(st.graph.num_vertices() == 2);
  CHECK(st.graph.involution(1) == 4);
}

TEST_CASE("pushforward examples") {
  const AGraph b = boundary4(1, 1, 1);
  CHECK(pushforward(MonoidHom::identity(1), b).graph == b);
  CHECK(pushforward(MonoidHom::zero(1, 0), star(2, 0, 1, 1)).graph.empty());
  const Pushforward p = pushforward(MonoidHom::zero(1, 0), star(1, 1, 1, 1));
  CHECK(p.graph == star(1, 1));
  CHECK(check_marked(p.morphism).empty());
  CHECK_THROWS_AS(pushforward(MonoidHom::identity(0), star(2)), Error);
}

TEST_CASE("stabilization is idempotent and stable on random graphs") {
  Rng rng(51);
  RandomGraphOptions opts;
  opts.rank = 1;
  opts.stable = false;
  opts.connected = false;
  for (int i = 0; i < 300; ++i) {
    const AGraph g = random_graph(rng, opts);
    const Stabilization st = stabilize(g);
    CHECK(is_stable(st.graph));
    CHECK(stabilize(st.graph).graph == st.graph);
    CHECK(check_combinatorial(st.morphism).empty());
  }
}

TEST_CASE("case order does not change the stabilization up to isomorphism") {
  Rng rng(52);
  RandomGraphOptions opts;
  opts.rank = 1;
  opts.stable = false;
  for (int i = 0; i < 200; ++i) {
    const AGraph g = random_graph(rng, opts);
    std::vector<VertexId> reversed = vertex_ids(g);
    std::reverse(reversed.begin(), reversed.end());
    CHECK(canonical_form(stabilize(g).graph) == canonical_form(stabilize(g, reversed).graph));
  }
}

TEST_CASE("universal property on small instances") {
  const UniversalPropertyReport stable = check_universal_property(boundary4(), {tripod(), star(4)});
  CHECK(stable.counterexamples.empty());
  const UniversalPropertyReport two = check_universal_property(case_two(), {star(1, 1), tripod()});
  CHECK(two.counterexamples.empty());
  CHECK(two.morphisms >= 1);
}
