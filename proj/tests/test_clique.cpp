#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "raatc/clique.hpp"

using namespace raatc;

namespace {

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("maximal cliques") {
  const Graph g = Graph::parse("4;0-1,1-2,1-3,2-3");
  const auto cliques = maximal_cliques(g);
  REQUIRE(cliques.size() == 2);
  CHECK(cliques[0] == set_from_members({0, 1}));
  CHECK(cliques[1] == set_from_members({1, 2, 3}));
  CHECK(clique_number(g) == 3);
  CHECK(maximal_cliques(Graph(0)).empty());
  CHECK(maximal_cliques(Graph(1)) == std::vector<VertexSet>{1});
}

TEST_CASE("all cliques includes the empty clique") {
  const auto cliques = all_cliques(Graph::parse("3;0-1"));
  CHECK(cliques.size() == 5);  // {}, 0, 1, 2, 01
}

TEST_CASE("two disjoint maximum cliques") {
  CHECK(has_two_disjoint_max_cliques(disjoint_cliques(3, 3)));
  CHECK(!has_two_disjoint_max_cliques(disjoint_cliques(3, 2)));
  CHECK(!has_two_disjoint_max_cliques(complete_graph(3)));
  CHECK(has_two_disjoint_max_cliques(edgeless_graph(2)));
}

TEST_CASE("z_r closed forms") {
  // complete graph: every vertex must be dropped once
  for (int n = 1; n <= 6; ++n)
    for (int r = 2; r <= 6; ++r)
      CHECK(z_r(complete_graph(n), r) == (r - 1) * n);
  // single vertex: one slot must stay empty
  for (int r = 2; r <= 8; ++r) CHECK(z_r(complete_graph(1), r) == r - 1);
  // two disjoint cliques K_k + K_l, k >= l
  for (int r = 2; r <= 5; ++r) {
    CHECK(z_r(disjoint_cliques(4, 2), r) == (r - 1) * 4 + 2);
    CHECK(z_r(disjoint_cliques(3, 3), r) == 3 * r);
  }
  CHECK_THROWS_AS(z_r(complete_graph(2), 1), std::invalid_argument);
}

TEST_CASE("z_r of the satellite family") {
  for (int n = 2; n <= 6; ++n) {
    const Graph g = o_n(n);
    for (int r = 2; r <= n + 2; ++r) {
      const int expected = (r <= n) ? (r - 1) * n + r : r * n;
      CHECK(z_r(g, r) == expected);
    }
  }
}

TEST_CASE("witness is valid and matches the optimum") {
  const Graph g = o_n(3);
  const ZrResult res = z_r_with_witness(g, 3);
  CHECK(res.value == 9);
  CHECK(res.witness.total == 9);
  CHECK(res.witness.valid_for(g));
  CHECK(static_cast<int>(res.witness.cliques.size()) == 3);

  // deterministic: two calls agree
  const ZrResult again = z_r_with_witness(g, 3);
  CHECK(again.witness.cliques == res.witness.cliques);
}

TEST_CASE("oracle equivalence on random graphs") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const double density = 0.2 + 0.6 * (trial / 40.0);
    const Graph g = random_graph(n, density, rng);
    for (int r = 2; r <= 4; ++r) {
      CAPTURE(g.to_edge_list());
      CAPTURE(r);
      CHECK(z_r(g, r) == z_r_oracle(g, r));
    }
  }
}

TEST_CASE("witness total equals z_r on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(3 + static_cast<int>(rng() % 5), 0.5, rng);
    for (int r = 2; r <= 4; ++r) {
      const ZrResult res = z_r_with_witness(g, r);
      CHECK(res.witness.valid_for(g));
      CHECK(res.witness.total == z_r(g, r));
    }
  }
}

TEST_CASE("shortcut check") {
  // disjoint cliques: two of the cliques already intersect trivially
  const Graph g = disjoint_cliques(3, 2);
  const ZrResult res = z_r_with_witness(g, 4);
  const auto shortcut = z_shortcut_check(g, 4, res.witness);
  if (shortcut) CHECK(*shortcut == res.value);
}
