#include <doctest.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace modgraph;
using namespace fixture;

namespace {

// sigma' = 4-tail vertex of class (d); phi contracts the edge of the
// 4-tail boundary graph.
struct CaseTwo {
  ExtendedIsogeny phi;
  CombinatorialMorphism b;
};

CaseTwo case_two(Coord d) {
  Isogeny iso = identity_isogeny(boundary4());
  add_contraction(iso, {{4, 5}});
  const ExtendedIsogeny phi = extend(iso);
  return {phi, gen::identify(phi.target(), star(4, 0, 1, d))};
}

CartesianObject singleton(const CombinatorialMorphism& b) { return {b.source, {{b}}}; }

}  // namespace

TEST_CASE("identification of the absolute stabilization") {
  const CombinatorialMorphism b = stabilization_identification(star(3, 0, 1, 2));
  CHECK(check_identification(b).empty());
  CombinatorialMorphism broken = b;
  broken.source.set_genus(0, 1);
  CHECK_FALSE(check_identification(broken).empty());
  const CartesianObject x = make_object({star(3, 0, 1, 1), star(3, 0, 1, 2)});
  CHECK(x.family.size() == 2);
  CHECK(check_cartesian_object(x).empty());
  CHECK_THROWS_AS(make_object({star(3, 0, 1, 1), star(4, 0, 1, 1)}), Error);
}

TEST_CASE("case II family on the 4-tail example") {
  const VarietyProfile p2 = projective_space(2);
  const CaseTwo c = case_two(2);
  CHECK(cartesian_case(c.phi) == CartesianCase::II);
  const auto lifts = cartesian_pullback(p2, c.phi, c.b);
  REQUIRE(lifts.size() == 3);
  const std::vector<std::pair<Coord, Coord>> splits = {{0, 2}, {1, 1}, {2, 0}};
  for (std::size_t i = 0; i < 3; ++i) {
    const AGraph& t = lifts[i].graph();
    CHECK(is_stable(t));
    CHECK(t.class_of(0)[0] == splits[i].first);
    CHECK(t.class_of(1)[0] == splits[i].second);
    CHECK(deg_graph(p2, t) == deg_graph(p2, c.b.target));
    CHECK(lifts[i].phi.target() == c.b.target);
    CHECK(check_identification(lifts[i].a).empty());
  }
  const ElementaryCartesian e = cartesian_lift(p2, c.phi, singleton(c.b));
  CHECK(check_elementary_cartesian(p2, e).empty());
  CHECK(check_cartesian_morphism(p2, {{e}}).empty());
}

TEST_CASE("incomplete and repetitive families are rejected") {
  const VarietyProfile p1 = projective_space(1);
  const CaseTwo c = case_two(2);
  const ElementaryCartesian e = cartesian_lift(p1, c.phi, singleton(c.b));
  ElementaryCartesian missing = e;
  missing.source.family.erase(missing.source.family.begin() + 1);
  missing.index_map.erase(missing.index_map.begin() + 1);
  missing.lifts.erase(missing.lifts.begin() + 1);
  const auto vm = check_elementary_cartesian(p1, missing);
  REQUIRE(has_violation(vm, "cart-incomplete"));
  CHECK(std::any_of(vm.begin(), vm.end(), [](const Violation& v) { return v.message == "incomplete list"; }));

  ElementaryCartesian twice = e;
  twice.source.family.push_back(e.source.family[0]);
  twice.index_map.push_back(e.index_map[0]);
  twice.lifts.push_back(e.lifts[0]);
  const auto vr = check_elementary_cartesian(p1, twice);
  REQUIRE(has_violation(vr, "cart-repetitive"));
  CHECK(std::any_of(vr.begin(), vr.end(), [](const Violation& v) { return v.message == "repetitive"; }));

  CHECK(has_violation(check_cartesian_morphism(p1, {}), "cart-witness"));
}

TEST_CASE("case I lifts a loop") {
  AGraph tau = star(1);
  tau.add_edge(1, 0, 2, 0);
  Isogeny iso = identity_isogeny(tau);
  add_contraction(iso, {{1, 2}});
  const ExtendedIsogeny phi = extend(iso);
  const VarietyProfile p1 = projective_space(1);
  const CombinatorialMorphism b = gen::identify(phi.target(), star(1, 1, 1, 3));
  const auto lifts = cartesian_pullback(p1, phi, b);
  REQUIRE(lifts.size() == 1);
  CHECK(lifts[0].graph().genus_of(0) == 0);
  CHECK(edges(lifts[0].graph()).size() == 1);
  CHECK(check_elementary_cartesian(p1, cartesian_lift(p1, phi, singleton(b))).empty());
}

TEST_CASE("case III forgets the corresponding tail") {
  Isogeny iso = identity_isogeny(star(4));
  add_forget(iso, 3);
  const ExtendedIsogeny phi = extend(iso);
  const VarietyProfile p1 = projective_space(1);
  const CombinatorialMorphism b = gen::identify(phi.target(), star(3, 0, 1, 1));
  const auto lifts = cartesian_pullback(p1, phi, b);
  REQUIRE(lifts.size() == 1);
  CHECK(tails(lifts[0].graph()).size() == 4);
  CHECK(lifts[0].a.flag_map.at(3) == std::get<ForgetStep>(lifts[0].phi.isogeny.steps[0]).forget.tail);
  CHECK(check_elementary_cartesian(p1, cartesian_lift(p1, phi, singleton(b))).empty());
}

TEST_CASE("case IV glues along an edge of the target") {
  const AGraph two = disjoint_union(tripod(), tripod());
  const ExtendedIsogeny phi = gluing(two, {{0, 3}});
  const VarietyProfile p1 = projective_space(1);
  const CombinatorialMorphism b = gen::identify(phi.target(), boundary4(1, 1, 0));
  const auto lifts = cartesian_pullback(p1, phi, b);
  REQUIRE(lifts.size() == 1);
  CHECK(connected_components(lifts[0].graph()).size() == 2);
  const CombinatorialMorphism lhs = compose(glue_morphism(lifts[0].phi), lifts[0].a);
  const CombinatorialMorphism rhs = compose(b, glue_morphism(phi));
  CHECK(lhs.flag_map == rhs.flag_map);
  CHECK(lhs.vertex_map == rhs.vertex_map);
  CHECK(check_elementary_cartesian(p1, cartesian_lift(p1, phi, singleton(b))).empty());
}

TEST_CASE("a forget removing a component has no lift") {
  const AGraph two = disjoint_union(tripod(), star(1, 1));
  Isogeny iso = identity_isogeny(two);
  CHECK_THROWS_AS(add_forget(iso, 0), Error);
}

TEST_CASE("random elementary pullbacks") {
  Rng rng(81);
  RandomGraphOptions opts;
  opts.max_flags = 8;
  opts.max_vertices = 3;
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    const AGraph tau = random_graph(rng, opts);
    const auto phi = gen::random_elementary(rng, tau);
    if (!phi) continue;
    const std::size_t rank = 1 + i % 2;
    const VarietyProfile p = rank == 1 ? projective_space(1 + i % 3) : gen::p1xp1();
    const AGraph cover = gen::random_cover(rng, phi->target(), rank);
    const CombinatorialMorphism b = gen::identify(phi->target(), cover);
    REQUIRE(check_identification(b).empty());
    const CartesianObject target{phi->target(), {{b}}};
    const ElementaryCartesian e = cartesian_lift(p, *phi, target);
    const auto v = check_elementary_cartesian(p, e);
    CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front().id + ": " + v.front().message));
    for (const auto& m : e.source.family) CHECK(deg_graph(p, m.graph()) == deg_graph(p, cover));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("sums, products and degree decomposition") {
  const VarietyProfile p1 = projective_space(1);
  const CartesianObject x = make_object({star(3, 0, 1, 0), star(3, 0, 1, 1), star(3, 0, 1, 2)});
  const CartesianObject empty{x.base, {}};
  CHECK(oplus(x, empty) == x);
  CHECK(oplus(x, x).family.size() == 6);
  CHECK_THROWS_AS(oplus(x, make_object({star(4, 0, 1, 0)})), Error);

  const CartesianObject unit = unit_object(1);
  CHECK(otimes(x, unit) == x);
  CHECK(otimes(unit, x) == x);

  const CartesianObject y = make_object({boundary4(1, 0, 1), boundary4(1, 1, 1)});
  const CartesianObject xy = otimes(x, y);
  CHECK(xy.family.size() == 6);
  CHECK(check_cartesian_object(xy).empty());
  const auto hx = homogeneous_decomposition(p1, x);
  const auto hy = homogeneous_decomposition(p1, y);
  const auto hxy = homogeneous_decomposition(p1, xy);
  for (const auto& [r, part] : hxy) {
    std::size_t expected = 0;
    for (const auto& [n, xn] : hx) {
      auto it = hy.find(r - n);
      if (it != hy.end()) expected += xn.family.size() * it->second.family.size();
    }
    CHECK(part.family.size() == expected);
  }
}
