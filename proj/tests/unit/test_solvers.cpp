#include <random>

#include "doctest.h"
#include "random_graphs.hpp"
#include "vizlab/generators.hpp"
#include "vizlab/oracles.hpp"
#include "vizlab/solvers.hpp"

using namespace vizlab;

namespace {

std::size_t gamma_of(const Graph& g) {
  Budget b;
  const auto r = domination_number(g, b);
  REQUIRE(r.exact());
  REQUIRE(r.witness->verify(g));
  return r.value();
}

std::size_t theta_of(const Graph& g) {
  Budget b;
  const auto r = clique_cover_number(g, b);
  REQUIRE(r.exact());
  REQUIRE(r.witness->verify(g));
  REQUIRE_FALSE(validate_partition(g, r.witness->partition));
  return r.value();
}

}  // namespace

TEST_SUITE("domination_number") {
  TEST_CASE("fixtures") {
    CHECK(gamma_of(complete_graph(5)) == 1);
    CHECK(gamma_of(cycle_graph(4)) == 2);
    CHECK(gamma_of(path_graph(7)) == 3);
    CHECK(gamma_of(Graph(1)) == 1);
    CHECK(gamma_of(cycle_graph(5)) == 2);
    CHECK(gamma_of(complete_bipartite(3, 3)) == 2);
    CHECK(gamma_of(wagner_example()) == 3);
    CHECK(gamma_of(k66_minus_c4s()) == 4);
  }

  TEST_CASE("fixtures match the brute-force oracle") {
    for (const Graph& g : {complete_graph(5), cycle_graph(4), path_graph(7), wagner_example(), k66_minus_c4s()}) {
      CHECK(gamma_of(g) == oracle::brute_force_gamma(g));
    }
  }

  TEST_CASE("witness is deterministic") {
    Budget b;
    const auto r = domination_number(wagner_example(), b);
    CHECK(r.witness->dominators == VertexSet(8, {0, 1, 2}));
  }

  TEST_CASE("disconnected graphs") {
    CHECK(gamma_of(Graph(4)) == 4);
    CHECK(gamma_of(Graph::from_edges(5, {{0, 1}, {2, 3}})) == 3);
  }

  TEST_CASE("budget exhaustion is reported, not guessed") {
    Budget b(3);
    const auto r = domination_number(cartesian_product(cycle_graph(6), cycle_graph(6)), b);
    CHECK(r.outcome == Outcome::unknown);
    CHECK(r.lower <= r.upper);
    CHECK(r.witness->verify(cartesian_product(cycle_graph(6), cycle_graph(6))));
    CHECK_THROWS_AS((void)r.value(), std::logic_error);
  }

  TEST_CASE("agrees with brute force on 500 random connected graphs up to 12 vertices") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> order(1, 12);
    std::uniform_real_distribution<double> density(0.05, 0.7);
    for (int i = 0; i < 500; ++i) {
      const Graph g = testing::random_connected_graph(rng, order(rng), density(rng));
      CHECK(gamma_of(g) == oracle::brute_force_gamma(g));
    }
  }

  TEST_CASE("parallel oracle matches the serial oracle") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
      const Graph g = testing::random_graph(rng, 1 + static_cast<std::size_t>(i % 14), 0.3);
      CHECK(oracle::brute_force_gamma_parallel(g, 4) == oracle::brute_force_gamma(g));
    }
  }

  TEST_CASE("oracle refuses large graphs") {
    CHECK_THROWS(oracle::brute_force_gamma(path_graph(21)));
  }
}

TEST_SUITE("clique_cover_number") {
  TEST_CASE("fixtures") {
    CHECK(theta_of(complete_graph(5)) == 1);
    CHECK(theta_of(cycle_graph(5)) == 3);
    CHECK(theta_of(wagner_example()) == 4);
    CHECK(theta_of(k66_minus_c4s()) == 6);
    CHECK(theta_of(Graph(3)) == 3);
    CHECK(oracle::brute_force_theta(wagner_example()) == 4);
  }

  TEST_CASE("agrees with exhaustive partition search on 200 random graphs up to 9 vertices") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> order(1, 9);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 200; ++i) {
      const Graph g = testing::random_graph(rng, order(rng), density(rng));
      CHECK(theta_of(g) == oracle::brute_force_theta(g));
    }
  }

  TEST_CASE("chromatic number of the complement") {
    Budget b;
    const auto c = chromatic_number(complement(cycle_graph(7)), b);
    CHECK(c.outcome == Outcome::exact);
    CHECK(c.upper == 4);
  }

  TEST_CASE("gamma never exceeds theta") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
      const Graph g = testing::random_connected_graph(rng, 2 + static_cast<std::size_t>(i % 10), 0.3);
      CHECK(gamma_of(g) <= theta_of(g));
    }
  }
}

TEST_SUITE("external_domination") {
  TEST_CASE("P3 single outside neighbor") {
    Budget b;
    const auto r = external_domination(path_graph(3), CliquePartition{{{0, 1}, {2}}}, {1}, b);
    REQUIRE(r.exact());
    CHECK(r.value() == 1);
    CHECK(r.witness->dominators == VertexSet(3, {1}));
  }

  TEST_CASE("C5 cell {0,1} needs two outside vertices") {
    const Graph c5 = cycle_graph(5);
    const CliquePartition p{{{0, 1}, {2, 3}, {4}}};
    Budget b;
    const auto r = external_domination(c5, p, {0}, b);
    REQUIRE(r.exact());
    CHECK(r.value() == 2);
    CHECK(r.witness->dominators == VertexSet(5, {2, 4}));
    // oracle agreement
    const auto brute = oracle::brute_force_cover(c5, {2, 3, 4}, {0, 1});
    REQUIRE(brute);
    CHECK(brute->size() == 2);
  }

  TEST_CASE("isolated target vertex is infeasible") {
    const Graph g = Graph::from_edges(3, {{0, 1}});
    Budget b;
    const auto r = external_domination(g, CliquePartition{{{0, 1}, {2}}}, {1}, b);
    CHECK(r.outcome == Outcome::infeasible);
  }

  TEST_CASE("targets must be a nonempty proper subset") {
    Budget b;
    const CliquePartition p{{{0, 1}, {2}}};
    CHECK_THROWS(external_domination(path_graph(3), p, {}, b));
    CHECK_THROWS(external_domination(path_graph(3), p, {0, 1}, b));
    CHECK_THROWS(external_domination(path_graph(3), p, {7}, b));
  }

  TEST_CASE("agrees with brute force on random instances") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 120; ++i) {
      const Graph g = testing::random_connected_graph(rng, 3 + static_cast<std::size_t>(i % 8), 0.4);
      Budget b;
      const auto p = clique_cover_number(g, b).witness->partition;
      if (p.size() < 2) continue;
      const std::vector<std::size_t> targets{static_cast<std::size_t>(i) % p.size()};
      std::vector<Vertex> allowed, tv;
      for (std::size_t c = 0; c < p.size(); ++c)
        for (Vertex v : p.cells[c]) (c == targets[0] ? tv : allowed).push_back(v);
      const auto brute = oracle::brute_force_cover(g, allowed, tv);
      const auto r = external_domination(g, p, targets, b);
      if (!brute) {
        CHECK(r.outcome == Outcome::infeasible);
      } else {
        REQUIRE(r.exact());
        CHECK(r.value() == brute->size());
      }
    }
  }
}

TEST_SUITE("enumerate_min_dominating_sets") {
  TEST_CASE("K3 gives the three singletons") {
    Budget b;
    const auto e = enumerate_min_dominating_sets(complete_graph(3), 100, b);
    CHECK(e.gamma == 1);
    CHECK(e.complete);
    REQUIRE(e.sets.size() == 3);
    CHECK(e.sets[0].dominators == VertexSet(3, {0}));
    CHECK(e.sets[2].dominators == VertexSet(3, {2}));
  }

  TEST_CASE("C4 every pair dominates") {
    Budget b;
    const auto e = enumerate_min_dominating_sets(cycle_graph(4), 100, b);
    CHECK(e.sets.size() == 6);
    CHECK(oracle::all_dominating_sets_of_size(cycle_graph(4), 2).size() == 6);
    CHECK(e.sets[0].dominators == VertexSet(4, {0, 1}));
    CHECK(e.sets[5].dominators == VertexSet(4, {2, 3}));
  }

  TEST_CASE("P3 has the unique center") {
    Budget b;
    const auto e = enumerate_min_dominating_sets(path_graph(3), 100, b);
    REQUIRE(e.sets.size() == 1);
    CHECK(e.sets[0].dominators == VertexSet(3, {1}));
  }

  TEST_CASE("limit truncates and flags incomplete") {
    Budget b;
    const auto e = enumerate_min_dominating_sets(cycle_graph(4), 4, b);
    CHECK(e.sets.size() == 4);
    CHECK_FALSE(e.complete);
    Budget b2;
    CHECK(enumerate_min_dominating_sets(cycle_graph(4), 6, b2).complete);
  }

  TEST_CASE("matches the oracle on random graphs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
      const Graph g = testing::random_connected_graph(rng, 2 + static_cast<std::size_t>(i % 9), 0.35);
      Budget b;
      const auto e = enumerate_min_dominating_sets(g, 100000, b);
      const auto brute = oracle::all_dominating_sets_of_size(g, oracle::brute_force_gamma(g));
      REQUIRE(e.sets.size() == brute.size());
      for (std::size_t k = 0; k < brute.size(); ++k) CHECK(e.sets[k].dominators.members() == brute[k]);
    }
  }
}
