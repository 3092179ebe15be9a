#include "raatc/covering.hpp"

#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace raatc {

long long HypothesisA::predicted_tc(int r) const {
  return r * predicted_slope;
}

HypothesisA hypothesis_a(const Graph& g, int v) {
  const VertexSet st = star(g, v);
  const int c = clique_number(g);
  HypothesisA result;
  result.predicted_slope = c;
  result.predicted_poly = IntPolynomial({0, 2 * c, -c});  // c*x(2-x)
  result.holds = true;
  for (VertexSet m : maximal_cliques(g)) {
    if (set_size(m) == c && (m & st) != 0) {
      result.holds = false;
      break;
    }
  }
  return result;
}

std::vector<CliquePairCertificate> hypothesis_b(const Graph& g, int v, int r) {
  if (r < 2) throw std::invalid_argument("hypothesis_b requires r >= 2");
  const VertexSet st = star(g, v);
  const int z = z_r(g, r);
  std::vector<CliquePairCertificate> out;
  const std::vector<VertexSet> cliques = all_cliques(g);
  for (size_t i = 0; i < cliques.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      VertexSet c1 = cliques[i], c2 = cliques[j];
      if (set_size(c1) < set_size(c2)) std::swap(c1, c2);
      if (static_cast<long long>(r - 1) * set_size(c1) + set_size(c2) <= z)
        continue;
      if ((c1 & c2 & st) != 0) continue;
      out.push_back({c1, c2});
    }
  }
  return out;
}

DoubleReport compare_double(const Graph& g, int v, int r_max) {
  DoubleReport report;
  report.base = g;
  report.cover = double_graph(g, v);
  report.vertex = v;
  report.r_max = r_max;
  if (r_max < 2 || r_max > report.cover.num_vertices() + 2)
    throw std::invalid_argument("r_max must be in 2..|V(double)|+2");
  for (int r = 2; r <= r_max; ++r) {
    long long zb = z_r(g, r);
    long long zc = z_r(report.cover, r);
    report.base_tc.push_back(zb);
    report.cover_tc.push_back(zc);
    report.relation.push_back(zc < zb ? '<' : (zc == zb ? '=' : '>'));
    report.hyp_b.push_back(hypothesis_b(g, v, r));
  }
  report.hyp_a = hypothesis_a(g, v);
  report.base_poly = poly_from_sequence(tc_sequence(g));
  report.cover_poly = poly_from_sequence(tc_sequence(report.cover));
  return report;
}

nlohmann::json DoubleReport::to_json() const {
  nlohmann::json j;
  j["vertex"] = vertex;
  j["r_max"] = r_max;
  j["base"] = base.to_json();
  j["cover"] = cover.to_json();
  j["base_tc"] = base_tc;
  j["cover_tc"] = cover_tc;
  std::string rel;
  for (char c : relation) rel += c;
  j["relation"] = rel;
  j["hypothesis_a"] = {{"holds", hyp_a.holds},
                       {"predicted_slope", hyp_a.predicted_slope},
                       {"predicted_poly", hyp_a.predicted_poly.to_json()}};
  nlohmann::json certs = nlohmann::json::array();
  for (size_t i = 0; i < hyp_b.size(); ++i) {
    nlohmann::json per_r = nlohmann::json::array();
    for (const auto& cert : hyp_b[i])
      per_r.push_back({{"c1", set_members(cert.c1)},
                       {"c2", set_members(cert.c2)}});
    certs.push_back({{"r", static_cast<int>(i) + 2},
                     {"count", per_r.size()},
                     {"pairs", per_r}});
  }
  j["hypothesis_b"] = certs;
  j["base_poly"] = base_poly.to_json();
  j["cover_poly"] = cover_poly.to_json();
  j["base_poly_str"] = base_poly.to_string();
  j["cover_poly_str"] = cover_poly.to_string();
  j["deg_base"] = base_poly.degree();
  j["deg_cover"] = cover_poly.degree();
  return j;
}

}  // namespace raatc
