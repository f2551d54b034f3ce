#include <doctest.h>

#include "fixtures.hpp"
#include "modgraph/canonical.hpp"
#include "modgraph/enumerate.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace modgraph;
using namespace fixture;

namespace {

std::set<std::vector<std::int64_t>> keys(const std::vector<AGraph>& gs) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& g : gs) out.insert(canonical_key(g, 64));
  return out;
}

}  // namespace

TEST_CASE("forest and degree filters") {
  const VarietyProfile p1 = projective_space(1);
  CHECK(is_admissible_member(p1, boundary4(1), ForestFilter{}));
  AGraph loop(1);
  loop.add_vertex(0, 0, cls({1}));
  loop.add_edge(0, 0, 1, 0);
  CHECK_FALSE(is_admissible_member(p1, loop, ForestFilter{}));
  CHECK_FALSE(is_admissible_member(p1, star(1, 1, 1), ForestFilter{}));
  CHECK(is_admissible_member(p1, boundary4(1, 1, 1), DegreeBound{2}));
  CHECK_FALSE(is_admissible_member(p1, boundary4(1, 2, 0), DegreeBound{2}));
}

TEST_CASE("four-pointed genus-zero strata of degree at most one") {
  const VarietyProfile p1 = projective_space(1);
  const auto gs = enumerate_stable_graphs(p1, {0, 4, 1, 2});
  CHECK(gs.size() == 6);
  for (const auto& g : gs) {
    CHECK(is_stable(g));
    CHECK(canonical_form(g, 64) == g);
  }
  CHECK(keys(gs).count(canonical_key(star(4, 0, 1, 0))) == 1);
  CHECK(keys(gs).count(canonical_key(boundary4(1))) == 1);
  CHECK(keys(gs) == oracle::brute_force_stable_keys(p1, {0, 4, 1, 2}));
}

TEST_CASE("enumeration matches brute force on further small bounds") {
  const VarietyProfile pt = point_profile();
  for (int g = 0; g <= 1; ++g) {
    for (int n = 0; n <= 3; ++n) {
      const EnumerationConstraints c{g, n, 0, 2};
      if (n + 2 * (g + 1) > 6) continue;
      CHECK(keys(enumerate_stable_graphs(pt, c)) == oracle::brute_force_stable_keys(pt, c));
    }
  }
  const EnumerationConstraints c{1, 1, 1, 2};
  CHECK(keys(enumerate_stable_graphs(gen::p1xp1(), c)) == oracle::brute_force_stable_keys(gen::p1xp1(), c));
}

TEST_CASE("moduli of stable curves of genus two have seven strata") {
  // Known count of stable graphs of genus 2 without markings.
  CHECK(enumerate_stable_graphs(point_profile(), {2, 0, 0, 2}).size() == 7);
  CHECK(enumerate_stable_graphs(point_profile(), {0, 5, 0, 3}).size() == 3);
}

TEST_CASE("bounds and output order") {
  CHECK_THROWS_AS(enumerate_stable_graphs(point_profile(), {3, 8, 0, 4}), Error);
  const auto a = enumerate_stable_graphs(projective_space(2), {0, 3, 2, 2});
  const auto b = enumerate_stable_graphs(projective_space(2), {0, 3, 2, 2});
  CHECK(a == b);
}
