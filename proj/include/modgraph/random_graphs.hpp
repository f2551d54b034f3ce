#pragma once

// Seeded random generators for graphs, homomorphisms and morphisms. Used by
// property tests, the acceptance runner and the CLI's --seed option.

#include <random>

#include "modgraph/isogeny.hpp"
#include "modgraph/marked.hpp"

namespace modgraph {

using Rng = std::mt19937_64;

struct RandomGraphOptions {
  std::size_t rank = 0;
  std::size_t max_flags = 12;
  int max_vertices = 4;
  int max_genus = 1;
  Coord max_class = 2;
  bool stable = true;
  bool connected = true;
};

// Flag count never exceeds max_flags. Stability is repaired by adding a
// tail when the budget allows, otherwise a class or a unit of genus.
AGraph random_graph(Rng& rng, const RandomGraphOptions& opts);

MonoidHom random_hom(Rng& rng, std::size_t source_rank, std::size_t target_rank,
                     Coord max_entry = 2);

// Contracts a random set of between min_edges and max_edges edges (clamped
// to what the graph has).
Contraction random_contraction(Rng& rng, const AGraph& g, std::size_t min_edges,
                               std::size_t max_edges);

// A random morphism sigma -> tau covering xi with sigma stable: pushes the
// classes of tau along xi, then cuts edges, forgets tails, drops or
// duplicates components and finally stabilizes.
CombinatorialMorphism random_morphism_into(Rng& rng, const AGraph& tau, const MonoidHom& xi,
                                           int operations = 3);

// Up to `steps` random one-edge contractions and stable forgets (never of
// type IV), starting at a stable tau.
Isogeny random_isogeny(Rng& rng, const AGraph& tau, int steps);

}  // namespace modgraph
