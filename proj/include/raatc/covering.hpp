#pragma once

#include <vector>

#include <json.hpp>

#include "raatc/clique.hpp"
#include "raatc/tc_poly.hpp"

namespace raatc {

// First double-cover hypothesis: no vertex of St(v) lies in any maximum
// clique. When it holds, TC_r of the double is r*c(g) with
// numerator c(g)*x(2-x).
struct HypothesisA {
  bool holds = false;
  long long predicted_slope = 0;        // c(g)
  IntPolynomial predicted_poly;         // c(g) * x(2-x)
  long long predicted_tc(int r) const;  // r * c(g)
};

HypothesisA hypothesis_a(const Graph& g, int v);

// Certificate pair for the second hypothesis: |c1| >= |c2|,
// (r-1)|c1| + |c2| > z_r(g), c1 & c2 & St(v) empty.
struct CliquePairCertificate {
  VertexSet c1 = 0;
  VertexSet c2 = 0;
};

std::vector<CliquePairCertificate> hypothesis_b(const Graph& g, int v, int r);

struct DoubleReport {
  Graph base;
  Graph cover;
  int vertex = 0;
  int r_max = 0;
  std::vector<long long> base_tc;   // index 0 <-> r = 2
  std::vector<long long> cover_tc;
  std::vector<char> relation;       // '<', '=', '>' per r (cover vs base)
  HypothesisA hyp_a;
  std::vector<std::vector<CliquePairCertificate>> hyp_b;  // per r = 2..r_max
  IntPolynomial base_poly;
  IntPolynomial cover_poly;

  nlohmann::json to_json() const;
};

DoubleReport compare_double(const Graph& g, int v, int r_max);

}  // namespace raatc
