#include <catch2/catch_amalgamated.hpp>

#include "tclique/subgraph.hpp"

using namespace tclique;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("subgraph containment basics") {
  REQUIRE(contains_subgraph(gen_complete(4), gen_complete(3)));
  REQUIRE_FALSE(contains_subgraph(cycle(5), gen_complete(3)));
  REQUIRE_FALSE(contains_subgraph(gen_turan(6, 3).graph, gen_complete(4)));
  // pattern larger than the host
  REQUIRE_FALSE(contains_subgraph(gen_complete(3), gen_complete(4)));
}

TEST_CASE("containment is not induced containment") {
  // C_4 sits inside K_4 as a subgraph even though no induced copy exists
  REQUIRE(contains_subgraph(gen_complete(4), cycle(4)));
  // a pattern with an isolated vertex only needs a spare host vertex
  Graph tri_plus_isolated(4);
  tri_plus_isolated.add_edge(0, 1);
  tri_plus_isolated.add_edge(0, 2);
  tri_plus_isolated.add_edge(1, 2);
  REQUIRE(contains_subgraph(gen_complete(4), tri_plus_isolated));
  REQUIRE_FALSE(contains_subgraph(gen_complete(3), tri_plus_isolated));
}

TEST_CASE("balanced r-partite graphs avoid K_{r+1}") {
  for (int n = 3; n <= 12; ++n) {
    for (int r = 2; r < n; ++r) {
      REQUIRE_FALSE(contains_subgraph(gen_turan(n, r).graph, gen_complete(r + 1)));
      REQUIRE(contains_subgraph(gen_turan(n, r).graph, gen_complete(r)));
    }
  }
}

TEST_CASE("chromatic number") {
  REQUIRE(chromatic_number(gen_complete(4)) == 4);
  REQUIRE(chromatic_number(cycle(5)) == 3);
  REQUIRE(chromatic_number(gen_turan(7, 3).graph) == 3);
  REQUIRE(chromatic_number(cycle(6)) == 2);
  REQUIRE(chromatic_number(Graph(1)) == 1);
  REQUIRE(chromatic_number(Graph(5)) == 1);
  REQUIRE(chromatic_number(gen_complete_multipartite({{3, 3}})) == 2);
  // Petersen graph
  Graph pet = parse_graph6("IheA@GUAo");
  REQUIRE(chromatic_number(pet) == 3);
}

TEST_CASE("chromatic number budget") {
  REQUIRE(chromatic_number(gen_complete(16)) == 16);
  REQUIRE_THROWS_AS(chromatic_number(Graph(17)), std::invalid_argument);
}
