#include <algorithm>
#include <fstream>
#include <random>

#include "doctest.h"
#include "random_graphs.hpp"
#include "vizlab/generators.hpp"
#include "vizlab/graph.hpp"
#include "vizlab/graph6.hpp"

using namespace vizlab;

TEST_SUITE("graph6") {
  TEST_CASE("A_ decodes to K2") {
    const Graph g = parse_graph6("A_");
    CHECK(g.order() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
  }

  TEST_CASE("@ is the single vertex") {
    const Graph g = parse_graph6("@");
    CHECK(g.order() == 1);
    CHECK(g.edge_count() == 0);
  }

  TEST_CASE("emit small fixtures") {
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(Graph(0)) == "?");
  }

  TEST_CASE("D?{ round-trips") {
    const Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(emit_graph6(g) == "D?{");
    // D?{: bits 000000 111100 -> edges 0-4, 1-4, 2-4, 3-4
    CHECK(g.edge_count() == 4);
    CHECK(g.degree(4) == 4);
  }

  TEST_CASE("header prefix and line endings are tolerated") {
    CHECK(parse_graph6(">>graph6<<A_") == complete_graph(2));
    CHECK(parse_graph6("A_\r\n") == complete_graph(2));
  }

  TEST_CASE("malformed input reports an offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A_x"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A "), ParseError);
    // 'A' plus '`' sets a padding bit beyond the single edge bit
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
    try {
      parse_graph6("Bw\x01");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
    }
  }

  TEST_CASE("long form header for more than 62 vertices") {
    const Graph g = cycle_graph(70);
    const std::string text = emit_graph6(g);
    CHECK(text.front() == '~');
    CHECK(parse_graph6(text) == g);
  }

  TEST_CASE("round-trip property on random graphs up to 20 vertices") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 1 + static_cast<std::size_t>(i % 20);
      const Graph g = testing::random_graph(rng, n, 0.1 + 0.8 * ((i * 7) % 10) / 10.0);
      CHECK(parse_graph6(emit_graph6(g)) == g);
    }
  }

  TEST_CASE("atlas fixture lines all round-trip") {
    std::ifstream in(std::string(VIZLAB_TEST_DATA_DIR) + "/atlas7.g6");
    REQUIRE(in);
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
      const Graph g = parse_graph6(line);
      CHECK(emit_graph6(g) == line);
      CHECK(g.is_connected());
      ++count;
    }
    CHECK(count == 996);
  }
}

TEST_SUITE("generators") {
  TEST_CASE("complete 5") {
    const Graph g = complete_graph(5);
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 10);
  }

  TEST_CASE("wagner example is the Mobius ladder on 8 vertices") {
    const Graph g = wagner_example();
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 12);
    for (Vertex v = 0; v < 8; ++v) {
      CHECK(g.degree(v) == 3);
      CHECK(g.adjacent(v, (v + 1) % 8));
      CHECK(g.adjacent(v, (v + 4) % 8));
    }
  }

  TEST_CASE("K66 minus three 4-cycles") {
    const Graph g = k66_minus_c4s();
    CHECK(g.order() == 12);
    CHECK(g.edge_count() == 24);
    for (Vertex v = 0; v < 12; ++v) CHECK(g.degree(v) == 4);
    for (Vertex u = 0; u < 6; ++u)
      for (Vertex v = 0; v < 6; ++v) CHECK_FALSE(g.adjacent(u, v));
    CHECK_FALSE(g.adjacent(0, 6));
    CHECK_FALSE(g.adjacent(1, 7));
    CHECK_FALSE(g.adjacent(4, 11));
    CHECK(g.adjacent(0, 8));
  }

  TEST_CASE("spec tokens") {
    CHECK(generate_from_spec("complete:4") == complete_graph(4));
    CHECK(generate_from_spec("path:3").edge_count() == 2);
    CHECK(generate_from_spec("cycle:5") == cycle_graph(5));
    CHECK(generate_from_spec("kbip:2,3").edge_count() == 6);
    CHECK(generate_from_spec("circulant:8:1,4") == wagner_example());
    CHECK(generate_from_spec("wagner") == wagner_example());
    CHECK(generate_from_spec("k66mc4") == k66_minus_c4s());
  }

  TEST_CASE("bad generator requests") {
    CHECK_THROWS_AS(generate_from_spec("petersen"), GeneratorError);
    CHECK_THROWS_AS(generate_from_spec("complete:0"), GeneratorError);
    CHECK_THROWS_AS(generate_from_spec("circulant:5:0"), GeneratorError);
    CHECK_THROWS_AS(generate_from_spec("circulant:5:5"), GeneratorError);
    CHECK_THROWS_AS(generate_from_spec("cycle:2"), GeneratorError);
    CHECK_THROWS_AS(generate_from_spec("path:x"), GeneratorError);
  }
}

TEST_SUITE("graph operations") {
  TEST_CASE("Graph rejects loops and out-of-range vertices") {
    Graph g(3);
    CHECK_THROWS(g.add_edge(1, 1));
    CHECK_THROWS(g.add_edge(0, 3));
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK_THROWS_AS(Graph(10, 5), SizeError);
  }

  TEST_CASE("closed neighborhoods") {
    const Graph k5 = complete_graph(5);
    CHECK(closed_neighborhood(k5, VertexSet(5, {0})).count() == 5);
    const Graph c4 = cycle_graph(4);
    CHECK(closed_neighborhood(c4, VertexSet(4, {0})) == VertexSet(4, {3, 0, 1}));
    const Graph w = wagner_example();
    VertexSet all(8);
    for (Vertex v = 0; v < 8; ++v) all.insert(v);
    CHECK(closed_neighborhood(w, all) == all);
  }

  TEST_CASE("complement") {
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    const Graph c5 = cycle_graph(5);
    const Graph cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    CHECK(cc.degree_sequence() == std::vector<std::size_t>(5, 2));
    // explicit pentagram: i ~ i+2
    for (Vertex v = 0; v < 5; ++v) CHECK(cc.adjacent(v, (v + 2) % 5));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
      const Graph g = testing::random_graph(rng, 1 + static_cast<std::size_t>(i % 15), 0.4);
      CHECK(complement(complement(g)) == g);
    }
  }

  TEST_CASE("cartesian product fixtures") {
    const Graph k2 = complete_graph(2);
    const Graph sq = cartesian_product(k2, k2);
    CHECK(sq.order() == 4);
    CHECK(sq.edge_count() == 4);
    CHECK(sq.degree_sequence() == std::vector<std::size_t>(4, 2));

    const Graph ladder = cartesian_product(path_graph(3), k2);
    CHECK(ladder.order() == 6);
    CHECK(ladder.edge_count() == 7);

    const Graph wp = cartesian_product(wagner_example(), path_graph(2));
    CHECK(wp.order() == 16);
    CHECK(wp.edge_count() == 32);
  }

  TEST_CASE("product layout follows g + h * |V(G)|") {
    const Graph g = path_graph(3);
    const Graph h = cycle_graph(4);
    const Graph gh = cartesian_product(g, h);
    for (Vertex a = 0; a < gh.order(); ++a) {
      for (Vertex b = 0; b < gh.order(); ++b) {
        if (a == b) continue;
        const auto pa = ProductVertex::from_flat(a, 3);
        const auto pb = ProductVertex::from_flat(b, 3);
        const bool expected = (pa.h == pb.h && g.adjacent(pa.g, pb.g)) || (pa.g == pb.g && h.adjacent(pa.h, pb.h));
        CHECK(gh.adjacent(a, b) == expected);
      }
    }
    CHECK(ProductVertex{2, 3}.flat(3) == 11);
  }

  TEST_CASE("product counts and symmetry on random pairs") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 60; ++i) {
      const Graph g = testing::random_graph(rng, 1 + static_cast<std::size_t>(i % 7), 0.5);
      const Graph h = testing::random_graph(rng, 1 + static_cast<std::size_t>((i * 3) % 6), 0.5);
      const Graph gh = cartesian_product(g, h);
      const Graph hg = cartesian_product(h, g);
      CHECK(gh.order() == g.order() * h.order());
      CHECK(gh.edge_count() == g.edge_count() * h.order() + h.edge_count() * g.order());
      CHECK(gh.degree_sequence() == hg.degree_sequence());
    }
  }

  TEST_CASE("product size cap") {
    CHECK_THROWS_AS(cartesian_product(complete_graph(10), complete_graph(10), 50), SizeError);
  }

  TEST_CASE("validate_partition") {
    CHECK_FALSE(validate_partition(complete_graph(3), CliquePartition{{{0, 1, 2}}}));
    const auto v = validate_partition(path_graph(3), CliquePartition{{{0, 2}, {1}}});
    REQUIRE(v);
    CHECK(v->kind == PartitionViolation::Kind::not_a_clique);
    CHECK(v->cell == 0);
    CHECK_FALSE(validate_partition(cycle_graph(5), CliquePartition{{{0, 1}, {2, 3}, {4}}}));

    const auto missing = validate_partition(cycle_graph(5), CliquePartition{{{0, 1}, {2, 3}}});
    REQUIRE(missing);
    CHECK(missing->kind == PartitionViolation::Kind::missing_vertex);
    CHECK(missing->vertex == 4);
    const auto dup = validate_partition(cycle_graph(5), CliquePartition{{{0, 1}, {1, 2}, {3, 4}}});
    REQUIRE(dup);
    CHECK(dup->kind == PartitionViolation::Kind::duplicated_vertex);
    const auto empty = validate_partition(cycle_graph(5), CliquePartition{{{0, 1}, {}, {2, 3}, {4}}});
    REQUIRE(empty);
    CHECK(empty->kind == PartitionViolation::Kind::empty_cell);
    const auto range = validate_partition(path_graph(2), CliquePartition{{{0, 1}, {5}}});
    REQUIRE(range);
    CHECK(range->kind == PartitionViolation::Kind::out_of_range);
  }

  TEST_CASE("VertexSet basics") {
    VertexSet s(130, {0, 64, 129});
    CHECK(s.count() == 3);
    CHECK(s.contains(129));
    CHECK(s.members() == std::vector<Vertex>{0, 64, 129});
    CHECK(s.to_string() == "{0,64,129}");
    CHECK_THROWS(s.insert(130));
    CHECK_THROWS((void)(s | VertexSet(10)));
    s.erase(64);
    CHECK(s.next(1) == 129);
  }
}
