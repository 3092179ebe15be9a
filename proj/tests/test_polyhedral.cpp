#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <json.hpp>

#include "raatc/clique.hpp"
#include "raatc/polyhedral.hpp"

using namespace raatc;

TEST_CASE("complex construction and faces") {
  const SimplicialComplex k = SimplicialComplex::boundary_simplex(3);
  CHECK(k.num_vertices() == 3);
  CHECK(k.facets().size() == 3);
  CHECK(k.dimension() == 1);
  CHECK(k.is_face(0));
  CHECK(k.is_face(0b011));
  CHECK(!k.is_face(0b111));
  CHECK(k.all_faces().size() == 7);  // {}, three vertices, three edges

  CHECK(SimplicialComplex::full_simplex(3).all_faces().size() == 8);
  CHECK(SimplicialComplex::points(2).facets().size() == 2);
}

TEST_CASE("facet containment reduction and validation") {
  const SimplicialComplex k(3, {0b011, 0b001, 0b100});
  CHECK(k.facets() == std::vector<FaceSet>{0b011, 0b100});
  CHECK_THROWS_AS(SimplicialComplex(2, {0b100}), std::invalid_argument);
  CHECK_THROWS_AS(SimplicialComplex(2, {}), std::invalid_argument);
  CHECK_NOTHROW(SimplicialComplex(2, {}, true));
  // ghost vertex 2 not covered by any facet
  CHECK_THROWS_AS(SimplicialComplex(2, {0b01}), std::invalid_argument);
  CHECK_NOTHROW(SimplicialComplex(2, {0b01}, true));
}

TEST_CASE("json parsing with 1-based vertices") {
  const nlohmann::json j = {{"m", 3}, {"facets", {{1, 2}, {2, 3}, {1, 3}}}};
  const SimplicialComplex k = SimplicialComplex::parse(j);
  CHECK(k.facets().size() == 3);
  CHECK(SimplicialComplex::parse(k.to_json()).facets() == k.facets());
  CHECK_THROWS_WITH(
      SimplicialComplex::parse({{"m", 2}, {"facets", {{0, 1}}}}),
      doctest::Contains("out of range"));
}

TEST_CASE("flag complex of a graph") {
  const SimplicialComplex k = flag_complex(Graph::parse("4;0-1,1-2,1-3,2-3"));
  CHECK(k.facets() == std::vector<FaceSet>{0b0011, 0b1110});
}

TEST_CASE("category of a polyhedral product") {
  // two complete-graph factors over the two-point complex: best singleton
  const FactorProfile profile =
      FactorProfile::of_graphs({complete_graph(3), complete_graph(2)});
  CHECK(profile.ls_logarithmic.asserted);
  const CatResult cat = cat_polyprod(profile, SimplicialComplex::points(2));
  CHECK(cat.value == 3);
  CHECK(cat.exact);
  // over the full simplex the factors multiply, cat adds
  CHECK(cat_polyprod(profile, SimplicialComplex::full_simplex(2)).value == 5);
}

TEST_CASE("exact TC requires all three assertions") {
  FactorProfile profile =
      FactorProfile::of_graphs({disjoint_cliques(3, 3), disjoint_cliques(2, 2)});
  CHECK(profile.tc_equals_r_cat.asserted);
  const SimplicialComplex k = SimplicialComplex::points(2);
  const TcResult exact = tc_polyprod(profile, k, 3);
  CHECK(exact.exact);
  CHECK(exact.value == 9);  // z_3 of the larger factor

  profile.tc_equals_r_cat = {};
  const TcResult bounds = tc_polyprod(profile, k, 3);
  CHECK(!bounds.exact);
  CHECK(bounds.lower <= 9);
  CHECK(bounds.upper == 9);  // r * best facet cat = 3 * 3
  CHECK(bounds.lower >= exact.value);  // the retract bound already reaches it
}

TEST_CASE("wedge lower bound") {
  // factors K_4 and K_2 over two points: (r-1)*4 + 2
  const FactorProfile profile =
      FactorProfile::of_graphs({complete_graph(4), complete_graph(2)});
  const SimplicialComplex k = SimplicialComplex::points(2);
  for (int r = 2; r <= 5; ++r)
    CHECK(tc_lower(profile, k, r) == (r - 1) * 4 + 2);
}

TEST_CASE("circle factors over the triangle boundary") {
  // three circle factors (each TC_r = r-1, cat 1) over the hollow triangle
  Factor circle;
  circle.cat = 1;
  for (int r = 2; r <= 6; ++r) circle.tc[r] = r - 1;
  FactorProfile profile;
  profile.factors = {circle, circle, circle};
  profile.ls_logarithmic = {true, "spheres"};
  const SimplicialComplex k = SimplicialComplex::boundary_simplex(3);
  CHECK(tc_lower(profile, k, 2) == 3);
  CHECK(cat_polyprod(profile, k).value == 2);
  CHECK_THROWS_AS(tc_polyprod(profile, k, 7), std::invalid_argument);
  profile.ls_logarithmic = {};
  CHECK_THROWS_AS(tc_lower(profile, k, 2), std::invalid_argument);
}

TEST_CASE("disjoint pair may use non-maximal faces") {
  // full simplex on two vertices: the facets intersect, but the two vertex
  // faces are disjoint
  const FactorProfile profile =
      FactorProfile::of_graphs({complete_graph(2), complete_graph(2)});
  const SimplicialComplex k = SimplicialComplex::full_simplex(2);
  CHECK(tc_lower(profile, k, 2) == 4);
}

TEST_CASE("join TC is the sum of the factors") {
  for (int r = 2; r <= 4; ++r) {
    const long long sum = join_tc({complete_graph(3), o_n(2)}, r);
    CHECK(sum == z_r(complete_graph(3), r) + z_r(o_n(2), r));
    CHECK(sum == z_r(join(complete_graph(3), o_n(2)), r));
  }
}

TEST_CASE("composite graph matches the polyhedral product") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    // random small factors with two disjoint maximum cliques
    std::vector<Graph> factors;
    const int m = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < m; ++i) {
      const int size = 1 + static_cast<int>(rng() % 2);
      factors.push_back(disjoint_cliques(size, size));
    }
    // random complex on m vertices
    std::vector<FaceSet> facets;
    const FaceSet full = (FaceSet{1} << m) - 1;
    for (FaceSet f = 1; f <= full; ++f)
      if (rng() % 3 == 0) facets.push_back(f);
    if (facets.empty()) facets.push_back(full);
    FaceSet covered = 0;
    for (FaceSet f : facets) covered |= f;
    for (int i = 0; i < m; ++i)
      if (!(covered & (FaceSet{1} << i))) facets.push_back(FaceSet{1} << i);
    const SimplicialComplex k(m, facets);

    const FactorProfile profile = FactorProfile::of_graphs(factors);
    const Graph composite = composite_graph(factors, k);
    for (int r = 2; r <= 3; ++r) {
      const TcResult tc = tc_polyprod(profile, k, r);
      REQUIRE(tc.exact);
      CHECK(tc.value == z_r(composite, r));
    }
  }
}

TEST_CASE("factor profile json round trip") {
  const nlohmann::json j = {
      {"factors",
       {{{"graph", complete_graph(2).to_json()}},
        {{"cat", 1}, {"tc", {{"2", 1}, {"3", 2}}}}}}};
  const FactorProfile profile = FactorProfile::from_json(j);
  REQUIRE(profile.factors.size() == 2);
  CHECK(profile.factors[0].cat_value() == 2);
  CHECK(profile.factors[1].tc_r(3) == 2);
  CHECK_THROWS_AS(profile.factors[1].tc_r(9), std::invalid_argument);
  // mixed profiles carry no automatic assertions
  CHECK(!profile.ls_logarithmic.asserted);
}
