#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "oversmooth/graph.hpp"

using namespace oversmooth;

namespace {

Graph make(GraphFamily family, int n, double p = 0.0, int k = 0,
           double beta = 0.0, std::uint64_t seed = 0) {
  GeneratorSpec spec;
  spec.family = family;
  spec.n = n;
  spec.edge_probability = p;
  spec.ring_degree = k;
  spec.rewire_probability = beta;
  spec.seed = seed;
  return generate(spec);
}

}  // namespace

TEST_CASE("load_edge_list parses a path") {
  std::istringstream in("0 1\n1 2");
  const Graph g = load_edge_list(in);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degrees() == std::vector<int>{1, 2, 1});
}

TEST_CASE("load_edge_list deduplicates symmetric duplicates") {
  std::istringstream in("0 1\n1 0\n0 1");
  const Graph g = load_edge_list(in);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("load_edge_list rejects self-loops, malformed lines, empty input") {
  std::istringstream loop("0 0");
  CHECK_THROWS_AS(load_edge_list(loop), std::invalid_argument);
  std::istringstream malformed("0 1\n2");
  CHECK_THROWS_AS(load_edge_list(malformed), std::invalid_argument);
  std::istringstream trailing("0 1 2");
  CHECK_THROWS_AS(load_edge_list(trailing), std::invalid_argument);
  std::istringstream empty("# only a comment\n\n");
  CHECK_THROWS_AS(load_edge_list(empty), std::invalid_argument);
}

TEST_CASE("load_edge_list skips comments and blank lines") {
  std::istringstream in("# header\n0 1\n\n  # indented comment\n1 2  # trailing\n");
  const Graph g = load_edge_list(in);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("complete(3) is the triangle") {
  const Graph g = make(GraphFamily::Complete, 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.degrees() == std::vector<int>{2, 2, 2});
}

TEST_CASE("er with p=0 yields isolated nodes") {
  const Graph g = make(GraphFamily::ErdosRenyi, 50, 0.0, 0, 0.0, 7);
  CHECK(g.node_count() == 50);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("karate fixture matches the BFS oracle") {
  const auto facts = oracles::bfs_facts(34, karate_edges());
  CHECK(facts.n == 34);
  CHECK(facts.edge_count == 78);
  CHECK(facts.d_max == 17);
  CHECK(facts.components == 1);
  CHECK(facts.diameter == 5);

  const Graph g = make(GraphFamily::Karate, 34);
  CHECK(g.node_count() == 34);
  CHECK(g.edge_count() == 78);
  CHECK(degree_stats(g).d_max == 17);
  CHECK(diameter(g) == 5);
  CHECK(connected_components(g).component_count == 1);
  for (int i = 0; i < 34; ++i) CHECK(g.degree(i) == facts.degrees[i]);
}

TEST_CASE("diameter on paths, complete graphs, and errors") {
  CHECK(diameter(make(GraphFamily::Path, 3)) == 2);
  CHECK(diameter(make(GraphFamily::Complete, 5)) == 1);
  for (int n = 2; n <= 8; ++n) {
    CHECK(diameter(make(GraphFamily::Path, n)) == n - 1);
  }
  CHECK(diameter(make(GraphFamily::Cycle, 10)) == 5);
  CHECK(diameter(make(GraphFamily::Cycle, 8)) == 4);

  const Graph disconnected = Graph::from_edge_pairs(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(diameter(disconnected), std::invalid_argument);
}

TEST_CASE("connected components") {
  CHECK(connected_components(make(GraphFamily::Path, 3)).component_count == 1);
  const Graph two = Graph::from_edge_pairs(4, {{0, 1}, {2, 3}});
  const ComponentPartition parts = connected_components(two);
  CHECK(parts.component_count == 2);
  CHECK(parts.component_id[0] == parts.component_id[1]);
  CHECK(parts.component_id[2] == parts.component_id[3]);
  CHECK(parts.component_id[0] != parts.component_id[2]);
}

TEST_CASE("degree stats") {
  CHECK(degree_stats(make(GraphFamily::Star, 10)).d_max == 9);
  CHECK(degree_stats(make(GraphFamily::Path, 3)).d_max == 2);
  const DegreeStats stats = degree_stats(make(GraphFamily::Star, 10));
  CHECK(stats.histogram[1] == 9);
  CHECK(stats.histogram[9] == 1);
}

TEST_CASE("degree sum equals twice the edge count") {
  const Graph graphs[] = {
      make(GraphFamily::ErdosRenyi, 40, 0.2, 0, 0.0, 3),
      make(GraphFamily::WattsStrogatz, 30, 0.0, 4, 0.3, 5),
      make(GraphFamily::Karate, 34),
      make(GraphFamily::Cycle, 9),
  };
  for (const Graph& g : graphs) {
    long total = 0;
    for (int d : g.degrees()) total += d;
    CHECK(total == 2 * g.edge_count());
  }
}

TEST_CASE("generation is deterministic for a fixed spec") {
  const Graph a = make(GraphFamily::ErdosRenyi, 60, 0.15, 0, 0.0, 42);
  const Graph b = make(GraphFamily::ErdosRenyi, 60, 0.15, 0, 0.0, 42);
  CHECK(a.edge_pairs() == b.edge_pairs());
  const Graph c = make(GraphFamily::ErdosRenyi, 60, 0.15, 0, 0.0, 43);
  CHECK(a.edge_pairs() != c.edge_pairs());

  const Graph w1 = make(GraphFamily::WattsStrogatz, 40, 0.0, 6, 0.2, 11);
  const Graph w2 = make(GraphFamily::WattsStrogatz, 40, 0.0, 6, 0.2, 11);
  CHECK(w1.edge_pairs() == w2.edge_pairs());
}

TEST_CASE("watts-strogatz keeps n*k/2 edges under rewiring") {
  const Graph g = make(GraphFamily::WattsStrogatz, 30, 0.0, 4, 0.5, 9);
  CHECK(g.edge_count() == 60);
  const Graph lattice = make(GraphFamily::WattsStrogatz, 30, 0.0, 4, 0.0, 9);
  for (int i = 0; i < 30; ++i) CHECK(lattice.degree(i) == 4);
}

TEST_CASE("generator specs validate") {
  GeneratorSpec bad;
  bad.family = GraphFamily::ErdosRenyi;
  bad.n = 5;
  bad.edge_probability = 1.5;
  CHECK_THROWS_AS(generate(bad), std::invalid_argument);

  GeneratorSpec ws;
  ws.family = GraphFamily::WattsStrogatz;
  ws.n = 10;
  ws.ring_degree = 3;  // odd
  CHECK_THROWS_AS(generate(ws), std::invalid_argument);

  CHECK_THROWS_AS(make(GraphFamily::Cycle, 2), std::invalid_argument);
}

TEST_CASE("generator spec mini-grammar") {
  const GeneratorSpec er = parse_generator_spec("er:50,0.2", 7);
  CHECK(er.family == GraphFamily::ErdosRenyi);
  CHECK(er.n == 50);
  CHECK(er.edge_probability == doctest::Approx(0.2));
  CHECK(er.seed == 7);

  const GeneratorSpec ws = parse_generator_spec("ws:50,4,0.1", 0);
  CHECK(ws.ring_degree == 4);

  CHECK(parse_generator_spec("karate", 0).n == 34);
  CHECK(parse_generator_spec("star:34", 0).family == GraphFamily::Star);
  CHECK_THROWS_AS(parse_generator_spec("triangle:3", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("er:50", 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("path:x", 0), std::invalid_argument);
}

TEST_CASE("star has a single hub") {
  const Graph g = make(GraphFamily::Star, 7);
  CHECK(g.degree(0) == 6);
  for (int i = 1; i < 7; ++i) CHECK(g.degree(i) == 1);
}
