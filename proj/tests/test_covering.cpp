#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "raatc/covering.hpp"

using namespace raatc;

namespace {

const char* kFig3 =
    "8;0-1,0-2,0-3,0-4,0-5,0-6,1-3,1-5,2-4,2-6,3-4,3-5,3-6,3-7,4-5,4-6,"
    "4-7,5-6,5-7,6-7";

}  // namespace

TEST_CASE("first hypothesis on the edge-plus-point graph") {
  const Graph g = Graph::parse("3;1-2");
  const HypothesisA hyp = hypothesis_a(g, 0);
  CHECK(hyp.holds);  // the only maximum clique {1,2} misses St(0) = {0}
  CHECK(hyp.predicted_slope == 2);
  CHECK(hyp.predicted_poly == IntPolynomial({0, 4, -2}));
  CHECK(hyp.predicted_tc(3) == 6);

  // prediction matches the measured double
  const Graph d = double_graph(g, 0);
  for (int r = 2; r <= 5; ++r) CHECK(z_r(d, r) == hyp.predicted_tc(r));
  CHECK(poly_from_sequence(tc_sequence(d)) == hyp.predicted_poly);
}

TEST_CASE("first hypothesis fails when a maximum clique meets the star") {
  CHECK(!hypothesis_a(complete_graph(3), 0).holds);
  CHECK(!hypothesis_a(Graph::parse("4;0-1,1-2,1-3,2-3"), 1).holds);
}

TEST_CASE("second hypothesis certificates per fixture") {
  // edge plus point: certificates at every r
  for (int r = 2; r <= 6; ++r)
    CHECK(!hypothesis_b(Graph::parse("3;1-2"), 0, r).empty());
  // pendant-edge triangle: certificates through r = 5
  for (int r = 2; r <= 5; ++r)
    CHECK(!hypothesis_b(Graph::parse("4;0-1,1-2,1-3,2-3"), 0, r).empty());
  // the eight-vertex graph: r = 2 only
  const Graph fig3 = Graph::parse(kFig3);
  CHECK(!hypothesis_b(fig3, 7, 2).empty());
  for (int r = 3; r <= 5; ++r) CHECK(hypothesis_b(fig3, 7, r).empty());
}

TEST_CASE("certificates satisfy their defining inequalities") {
  const Graph g = Graph::parse(kFig3);
  const int z = z_r(g, 2);
  const VertexSet st = star(g, 7);
  for (const auto& cert : hypothesis_b(g, 7, 2)) {
    CHECK(g.is_clique(cert.c1));
    CHECK(g.is_clique(cert.c2));
    CHECK(set_size(cert.c1) >= set_size(cert.c2));
    CHECK(set_size(cert.c1) + set_size(cert.c2) > z);
    CHECK((cert.c1 & cert.c2 & st) == 0);
  }
}

TEST_CASE("double comparison report") {
  const DoubleReport report = compare_double(Graph::parse(kFig3), 7, 5);
  CHECK(report.cover.num_vertices() == 11);
  CHECK(report.base_tc == std::vector<long long>{7, 13, 18, 23});
  CHECK(report.cover_tc == std::vector<long long>{8, 13, 18, 23});
  CHECK(std::string(report.relation.begin(), report.relation.end()) ==
        ">===");
  CHECK(report.base_poly.to_string() == "7x - x^2 - x^3");
  CHECK(report.cover_poly.to_string() == "8x - 3x^2");
  CHECK(!report.hyp_a.holds);

  const nlohmann::json j = report.to_json();
  CHECK(j.at("relation") == ">===");
  CHECK(j.at("deg_base") == 3);
  CHECK(j.at("deg_cover") == 2);
}

TEST_CASE("r_max validation") {
  CHECK_THROWS_AS(compare_double(Graph::parse("3;1-2"), 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(compare_double(Graph::parse("3;1-2"), 0, 99),
                  std::invalid_argument);
}
