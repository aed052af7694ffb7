#pragma once

#include <random>

#include "vizlab/graph.hpp"

namespace vizlab::testing {

/// G(n, p) with a fixed generator so failures reproduce.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random spanning tree plus G(n, p) extras, so always connected.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g = random_graph(rng, n, p);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    g.add_edge(parent(rng), v);
  }
  return g;
}

}  // namespace vizlab::testing
