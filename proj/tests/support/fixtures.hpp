#pragma once

// Small named graphs shared by the test suites.

#include "modgraph/graph.hpp"

namespace fixture {

using namespace modgraph;

inline MonoidElement cls(std::vector<Coord> c) { return MonoidElement(std::move(c)); }

// One genus-g vertex with n tails 0..n-1.
inline AGraph star(int n, int g = 0, std::size_t rank = 0, Coord degree = 0) {
  AGraph t(rank);
  std::vector<Coord> c(rank, 0);
  if (rank > 0) c[0] = degree;
  t.add_vertex(0, g, cls(c));
  for (int f = 0; f < n; ++f) t.add_tail(f, 0);
  return t;
}

inline AGraph tripod() { return star(3); }

// One vertex of genus g with a loop {0, 1}.
inline AGraph loop_graph(int g = 0) {
  AGraph t;
  t.add_vertex(0, g);
  t.add_edge(0, 0, 1, 0);
  return t;
}

// Vertices 0 and 1 of genera g0, g1, joined by `parallel` edges; tails on
// vertex 0 and vertex 1 as requested. Edge flags come after the tails.
inline AGraph two_vertex(int g0, int g1, int parallel, int tails0 = 0, int tails1 = 0) {
  AGraph t;
  t.add_vertex(0, g0);
  t.add_vertex(1, g1);
  FlagId f = 0;
  for (int i = 0; i < tails0; ++i) t.add_tail(f++, 0);
  for (int i = 0; i < tails1; ++i) t.add_tail(f++, 1);
  for (int i = 0; i < parallel; ++i) {
    t.add_edge(f, 0, f + 1, 1);
    f += 2;
  }
  return t;
}

// The 4-tail boundary graph: two genus-0 vertices with tails {0,1} and
// {2,3} joined by the edge {4,5}.
inline AGraph boundary4(std::size_t rank = 0, Coord d0 = 0, Coord d1 = 0) {
  AGraph t(rank);
  std::vector<Coord> c0(rank, 0), c1(rank, 0);
  if (rank > 0) {
    c0[0] = d0;
    c1[0] = d1;
  }
  t.add_vertex(0, 0, cls(c0));
  t.add_vertex(1, 0, cls(c1));
  t.add_tail(0, 0);
  t.add_tail(1, 0);
  t.add_tail(2, 1);
  t.add_tail(3, 1);
  t.add_edge(4, 0, 5, 1);
  return t;
}

}  // namespace fixture
