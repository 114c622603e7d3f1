#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "tclique/cliques.hpp"

using namespace tclique;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("triangle enumeration of K_4 is lexicographic") {
  CliqueSet cs = enumerate_cliques(gen_complete(4), 3);
  REQUIRE(cs.size() == 4);
  const std::vector<int> expected{0, 1, 2, 0, 1, 3, 0, 2, 3, 1, 2, 3};
  REQUIRE(std::vector<int>(cs.flat().begin(), cs.flat().end()) == expected);
}

TEST_CASE("five-cycle has no triangles") {
  REQUIRE(enumerate_cliques(cycle(5), 3).empty());
}

TEST_CASE("triangle count of the balanced tripartite graphs") {
  REQUIRE(enumerate_cliques(gen_turan(7, 3).graph, 3).size() == 12);
  REQUIRE(clique_count(gen_turan(6, 3).graph, 3) == 8);
}

TEST_CASE("clique counts") {
  REQUIRE(clique_count(gen_complete(5), 3) == 10);
  REQUIRE(clique_count(gen_complete_multipartite({{2, 3}}), 3) == 0);
  // t = 2 counts edges
  Graph g = gen_random(9, 0.5, 3);
  REQUIRE(clique_count(g, 2) == g.edge_count());
}

TEST_CASE("order below 2 is rejected") {
  REQUIRE_THROWS_AS(enumerate_cliques(gen_complete(3), 1), std::invalid_argument);
  REQUIRE_THROWS_AS(clique_count(gen_complete(3), 0), std::invalid_argument);
  REQUIRE_THROWS_AS(per_vertex_clique_counts(gen_complete(3), 1), std::invalid_argument);
}

TEST_CASE("per-vertex clique counts") {
  SECTION("balanced tripartite on 6 is uniform") {
    REQUIRE(per_vertex_clique_counts(gen_turan(6, 3).graph, 3) ==
            std::vector<std::int64_t>{4, 4, 4, 4, 4, 4});
  }
  SECTION("path counts at t = 2 are the degrees") {
    Graph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    REQUIRE(per_vertex_clique_counts(path, 2) == std::vector<std::int64_t>{1, 2, 1});
  }
  SECTION("triangle-free graph is all zero") {
    REQUIRE(per_vertex_clique_counts(cycle(5), 3) == std::vector<std::int64_t>{0, 0, 0, 0, 0});
  }
  SECTION("entries sum to t * c_t on random graphs") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const int n = 4 + static_cast<int>(seed % 7);
      const int t = 2 + static_cast<int>(seed % 3);
      Graph g = gen_random(n, 0.6, seed);
      const auto counts = per_vertex_clique_counts(g, t);
      const auto total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
      REQUIRE(total == static_cast<std::int64_t>(t) * static_cast<std::int64_t>(clique_count(g, t)));
    }
  }
}

TEST_CASE("balanced r-partite r-clique count matches the part-size product") {
  for (int n = 2; n <= 20; ++n) {
    for (int r = 2; r <= n; ++r) {
      REQUIRE(clique_count(gen_turan(n, r).graph, r) == turan_clique_count(n, r));
    }
  }
}

TEST_CASE("enumeration against a naive subset filter") {
  // reference: test every t-subset directly
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 6;
    const int t = 2 + static_cast<int>(seed % 3);
    Graph g = gen_random(n, 0.55, 100 + seed);
    CliqueSet cs = enumerate_cliques(g, t);

    std::vector<std::vector<int>> naive;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> void {
      if (static_cast<int>(pick.size()) == t) {
        for (std::size_t a = 0; a < pick.size(); ++a)
          for (std::size_t b = a + 1; b < pick.size(); ++b)
            if (!g.adjacent(pick[a], pick[b])) return;
        naive.push_back(pick);
        return;
      }
      for (int v = start; v < n; ++v) {
        pick.push_back(v);
        self(self, v + 1);
        pick.pop_back();
      }
    };
    rec(rec, 0);

    REQUIRE(cs.size() == naive.size());
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const auto c = cs.clique(k);
      REQUIRE(std::vector<int>(c.begin(), c.end()) == naive[k]);
    }
  }
}
