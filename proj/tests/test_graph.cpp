#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "raatc/graph.hpp"

using namespace raatc;

TEST_CASE("vertex set helpers") {
  CHECK(set_size(0) == 0);
  CHECK(set_size(0b1011) == 3);
  CHECK(set_members(0b1011) == std::vector<int>{0, 1, 3});
  CHECK(set_from_members({0, 1, 3}) == 0b1011);
}

TEST_CASE("parse and edge list round trip") {
  const Graph g = Graph::parse("4;0-1,1-2,1-3,2-3");
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK(!g.adjacent(0, 3));
  CHECK(Graph::parse(g.to_edge_list()) == g);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Graph::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("3;0-3"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("3;0-0"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse("3;a-b"), std::invalid_argument);
  CHECK_THROWS_WITH(Graph::parse("3;0-1,xy"),
                    doctest::Contains("xy"));
}

TEST_CASE("json round trip") {
  Graph g = Graph::parse("3;1-2");
  g.set_labels({"a", "b", "c"});
  const Graph back = Graph::from_json(g.to_json());
  CHECK(back == g);
  CHECK(back.labels() == g.labels());
}

TEST_CASE("star includes the vertex and its neighbors") {
  const Graph g = Graph::parse("4;0-1,1-2,1-3,2-3");
  CHECK(star(g, 1) == set_from_members({0, 1, 2, 3}));
  CHECK(star(g, 0) == set_from_members({0, 1}));
}

TEST_CASE("double along a star") {
  // doubling "3;1-2" at 0 glues only at vertex 0: two disjoint edges plus 0
  const Graph d = double_graph(Graph::parse("3;1-2"), 0);
  CHECK(d.num_vertices() == 5);
  CHECK(d.num_edges() == 2);
  CHECK(d.adjacent(1, 2));
  CHECK(d.adjacent(3, 4));
  CHECK(!d.adjacent(0, 3));

  // doubling at a dominating vertex changes nothing but adds no new vertex
  const Graph g2 = Graph::parse("3;0-1,0-2");
  const Graph d2 = double_graph(g2, 1);
  CHECK(d2.num_vertices() == 4);  // only vertex 2 is outside St(1)
  CHECK(d2.adjacent(0, 3));
  CHECK(!d2.adjacent(2, 3));
}

TEST_CASE("join adds all cross edges") {
  const Graph j = join(complete_graph(2), edgeless_graph(2));
  CHECK(j.num_vertices() == 4);
  CHECK(j.num_edges() == 1 + 4);
  CHECK(j.adjacent(0, 2));
  CHECK(!j.adjacent(2, 3));
}

TEST_CASE("standard families") {
  CHECK(complete_graph(4).num_edges() == 6);
  CHECK(edgeless_graph(5).num_edges() == 0);
  const Graph dc = disjoint_cliques(3, 2);
  CHECK(dc.num_vertices() == 5);
  CHECK(dc.num_edges() == 3 + 1);
  CHECK(!dc.adjacent(0, 3));

  const Graph o3 = o_n(3);
  CHECK(o3.num_vertices() == 6);
  CHECK(o3.num_edges() == 3 + 3 * 2);
  CHECK(o3.adjacent(3, 1));   // satellite 0 sees central 1, 2
  CHECK(!o3.adjacent(3, 0));  // but not central 0
}

TEST_CASE("isomorphism check") {
  CHECK(isomorphic(Graph::parse("3;0-1"), Graph::parse("3;1-2")));
  CHECK(!isomorphic(Graph::parse("3;0-1"), Graph::parse("3;0-1,1-2")));
  CHECK(!isomorphic(complete_graph(3), edgeless_graph(3)));
}
