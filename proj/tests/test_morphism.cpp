#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "modgraph/canonical.hpp"
#include "modgraph/random_graphs.hpp"
#include "oracles.hpp"

using namespace modgraph;
using namespace fixture;

TEST_CASE("identity contraction validates") {
  Rng rng(41);
  RandomGraphOptions opts;
  opts.rank = 1;
  for (int i = 0; i < 50; ++i) {
    const AGraph g = random_graph(rng, opts);
    CHECK(check_contraction(identity_contraction(g)).empty());
    CHECK(contract_edges(g, {}) == identity_contraction(g));
  }
}

TEST_CASE("genus condition on loop contraction") {
  const Contraction c = contract_edges(loop_graph(1), {{0, 1}});
  CHECK(c.target.genus_of(0) == 2);
  CHECK(check_contraction(c).empty());
  Contraction bad = c;
  bad.target.set_genus(0, 1);
  CHECK(has_violation(check_contraction(bad), "doc-genus"));
  CHECK(contract_edges(loop_graph(0), {{0, 1}}).target.genus_of(0) == 1);
}

TEST_CASE("contracting a bridge adds genera") {
  const Contraction c = contract_edges(two_vertex(1, 2, 1), {{0, 1}});
  CHECK(c.target.num_vertices() == 1);
  CHECK(c.target.genus_of(0) == 3);
  CHECK(c.target.num_flags() == 0);
}

TEST_CASE("contracted subgraphs") {
  const AGraph b = boundary4();
  const Contraction c = contract_edges(b, {{4, 5}});
  CHECK(is_elementary(c));
  const AGraph sub = contracted_subgraph(c, 0);
  CHECK(sub.num_vertices() == 2);
  CHECK(edges(sub).size() == 1);
  CHECK(tails(sub).empty());

  const Contraction id = identity_contraction(b);
  const AGraph lone = contracted_subgraph(id, 1);
  CHECK(lone.num_vertices() == 1);
  CHECK(lone.num_flags() == 0);

  const AGraph loop = contracted_subgraph(contract_edges(loop_graph(), {{0, 1}}), 0);
  CHECK(loop.num_vertices() == 1);
  CHECK(edges(loop).size() == 1);
}

TEST_CASE("invalid contractions are reported") {
  Contraction c = contract_edges(boundary4(), {{4, 5}});
  c.flag_map.erase(0);
  CHECK_FALSE(check_contraction(c).empty());
  Contraction d = contract_edges(boundary4(), {{4, 5}});
  d.vertex_map[1] = 7;
  CHECK_FALSE(check_contraction(d).empty());
}

TEST_CASE("decomposition into elementary contractions") {
  CHECK(decompose_elementary(identity_contraction(boundary4())).empty());
  AGraph chain;
  chain.add_vertex(0);
  chain.add_vertex(1);
  chain.add_vertex(2);
  chain.add_tail(0, 0);
  chain.add_tail(1, 0);
  chain.add_edge(2, 0, 3, 1);
  chain.add_tail(4, 1);
  chain.add_edge(5, 1, 6, 2);
  chain.add_tail(7, 2);
  chain.add_tail(8, 2);
  const Contraction both = contract_edges(chain, {{2, 3}, {5, 6}});
  const auto factors = decompose_elementary(both);
  REQUIRE(factors.size() == 2);
  CHECK(compose(factors[1], factors[0]) == both);
  const Contraction first = contract_edges(chain, {{2, 3}});
  const Contraction second = contract_edges(first.target, {{5, 6}});
  CHECK(canonical_form(compose(second, first).target) == canonical_form(both.target));
  CHECK_THROWS(decompose_elementary(both, {{2, 3}}));
}

TEST_CASE("random decompositions recompose") {
  Rng rng(42);
  RandomGraphOptions opts;
  opts.rank = 2;
  for (int i = 0; i < 200; ++i) {
    const AGraph g = random_graph(rng, opts);
    const Contraction c = random_contraction(rng, g, 0, 4);
    REQUIRE(check_contraction(c).empty());
    const auto factors = decompose_elementary(c);
    CHECK(factors.size() == contracted_edges(c).size());
    Contraction acc = identity_contraction(g);
    for (const auto& f : factors) acc = compose(f, acc);
    CHECK(acc == c);
    CHECK(compose(identity_contraction(c.target), c) == c);
    CHECK(compose(c, identity_contraction(g)) == c);
  }
}

TEST_CASE("contraction composition is associative") {
  Rng rng(43);
  RandomGraphOptions opts;
  opts.rank = 1;
  for (int i = 0; i < 100; ++i) {
    const AGraph g = random_graph(rng, opts);
    const Contraction a = random_contraction(rng, g, 0, 2);
    const Contraction b = random_contraction(rng, a.target, 0, 2);
    const Contraction c = random_contraction(rng, b.target, 0, 2);
    CHECK(compose(c, compose(b, a)) == compose(compose(c, b), a));
  }
}

TEST_CASE("component inclusion is complete") {
  const AGraph two = disjoint_union(tripod(), star(1, 1));
  const AGraph part = induced_subgraph(two, {0});
  const CombinatorialMorphism inc = inclusion_morphism(part, two);
  CHECK(check_combinatorial(inc).empty());
  CHECK(is_complete(inc));
}

TEST_CASE("condition 3 and condition 5 failures") {
  // An edge between two genus-1 vertices mapped to two tails of a genus-1
  // vertex pair with no zero vertex in between.
  const AGraph source = two_vertex(1, 1, 1);
  AGraph target;
  target.add_vertex(0, 1);
  target.add_vertex(1, 1);
  target.add_tail(0, 0);
  target.add_tail(1, 1);
  CombinatorialMorphism a{source, target, {{0, 0}, {1, 1}}, {{0, 0}, {1, 1}}, MonoidHom::identity(0)};
  CHECK(has_violation(check_combinatorial(a), "commor-3"));
  CHECK_FALSE(oracle::chain_condition_holds(a));

  CombinatorialMorphism g = identity_morphism(star(1, 1));
  g.target.set_genus(0, 2);
  CHECK(has_violation(check_combinatorial(g), "commor-5"));
}

TEST_CASE("cut, forget and glue") {
  const BuiltMorphism cut = cut_edge(two_vertex(0, 0, 1, 1, 1), 2);
  CHECK(tails(cut.graph).size() == 4);
  CHECK(check_combinatorial(cut.morphism).empty());
  CHECK(cut.morphism.flag_map.at(2) == 2);

  const BuiltMorphism cut_loop = cut_edge(loop_graph(), 0);
  CHECK(cut_loop.graph.num_vertices() == 1);
  CHECK(tails(cut_loop.graph).size() == 2);

  const BuiltMorphism f = forget_tail(star(4), 3);
  CHECK(is_isomorphic(f.graph, tripod()));
  CHECK(check_combinatorial(f.morphism).empty());
  const BuiltMorphism unstable = forget_tail(tripod(), 0);
  CHECK_FALSE(is_stable(unstable.graph));
  CHECK(check_combinatorial(unstable.morphism).empty());

  const BuiltMorphism loop = glue_tails(star(2, 1), 0, 1);
  CHECK(edges(loop.graph).size() == 1);
  const AGraph pair = disjoint_union(tripod(), tripod());
  const BuiltMorphism joined = glue_tails(pair, 0, 3);
  CHECK(connected_components(joined.graph).size() == 1);
  CHECK(cut_edge(joined.graph, 0).graph == pair);
}

TEST_CASE("random cuts and forgets validate") {
  Rng rng(44);
  RandomGraphOptions opts;
  opts.rank = 1;
  for (int i = 0; i < 200; ++i) {
    const AGraph g = random_graph(rng, opts);
    for (const Edge& e : edges(g)) CHECK(check_combinatorial(cut_edge(g, e.first).morphism).empty());
    for (FlagId t : tails(g)) CHECK(check_combinatorial(forget_tail(g, t).morphism).empty());
  }
}

TEST_CASE("random morphisms validate and compose") {
  Rng rng(45);
  RandomGraphOptions opts;
  opts.rank = 2;
  opts.max_flags = 10;
  for (int i = 0; i < 150; ++i) {
    const AGraph tau = random_graph(rng, opts);
    const MonoidHom xi = random_hom(rng, 2, 1 + i % 2);
    const CombinatorialMorphism a = random_morphism_into(rng, tau, xi);
    REQUIRE(check_combinatorial(a).empty());
    CHECK(is_stable(a.source));
    CHECK(oracle::chain_condition_holds(a));
    const CombinatorialMorphism b = random_morphism_into(rng, a.source, MonoidHom::identity(a.source.rank()));
    const CombinatorialMorphism ab = compose(a, b);
    CHECK(check_combinatorial(ab).empty());
    CHECK(compose(a, identity_morphism(a.source)) == a);
  }
}

TEST_CASE("morphism enumeration finds the identity") {
  const auto all = enumerate_combinatorial_morphisms(boundary4(), boundary4(), MonoidHom::identity(0));
  std::size_t automorphisms = 0;
  bool has_identity = false;
  for (const auto& a : all) {
    CHECK(check_combinatorial(a).empty());
    std::set<FlagId> image;
    for (const auto& [f, h] : a.flag_map) image.insert(h);
    bool respects_j = true;
    for (const auto& [f, h] : a.flag_map) {
      respects_j = respects_j && a.flag_map.at(a.source.involution(f)) == a.target.involution(h);
    }
    automorphisms += image.size() == 6 && respects_j;
    has_identity = has_identity || a == identity_morphism(boundary4());
  }
  // tail swaps at each vertex and the swap of the two halves
  CHECK(automorphisms == 8);
  CHECK(has_identity);
}
