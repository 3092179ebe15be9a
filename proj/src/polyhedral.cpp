#include "raatc/polyhedral.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "raatc/clique.hpp"

namespace raatc {

SimplicialComplex::SimplicialComplex(int m, std::vector<FaceSet> facets,
                                     bool allow_empty)
    : m_(m) {
  if (m < 0 || m > 64)
    throw std::invalid_argument("vertex count must be in 0..64");
  const FaceSet full = (m == 64) ? ~FaceSet{0} : (FaceSet{1} << m) - 1;
  std::set<FaceSet> unique;
  for (FaceSet f : facets) {
    if ((f & ~full) != 0)
      throw std::invalid_argument("facet vertex out of range");
    unique.insert(f);
  }
  // containment reduction
  for (FaceSet f : unique) {
    bool contained = false;
    for (FaceSet g : unique) {
      if (g != f && (f & g) == f) {
        contained = true;
        break;
      }
    }
    if (!contained) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
  if (!allow_empty) {
    if (facets_.empty())
      throw std::invalid_argument("empty facet list without explicit flag");
    FaceSet covered = 0;
    for (FaceSet f : facets_) covered |= f;
    if (covered != full)
      throw std::invalid_argument("ghost vertex without explicit flag");
  }
}

bool SimplicialComplex::is_face(FaceSet s) const {
  if (s == 0) return true;
  for (FaceSet f : facets_)
    if ((s & f) == s) return true;
  return false;
}

std::vector<FaceSet> SimplicialComplex::all_faces() const {
  std::set<FaceSet> seen;
  seen.insert(0);
  for (FaceSet f : facets_) {
    FaceSet s = f;
    while (true) {
      seen.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  return {seen.begin(), seen.end()};
}

int SimplicialComplex::dimension() const {
  int best = -1;
  for (FaceSet f : facets_) best = std::max(best, std::popcount(f) - 1);
  return best;
}

SimplicialComplex SimplicialComplex::parse(const nlohmann::json& j) {
  const int m = j.at("m").get<int>();
  std::vector<FaceSet> facets;
  for (const auto& face : j.at("facets")) {
    FaceSet s = 0;
    for (const auto& v : face) {
      int x = v.get<int>();
      if (x < 1 || x > m)
        throw std::invalid_argument("facet vertex " + std::to_string(x) +
                                    " out of range 1.." + std::to_string(m));
      s |= FaceSet{1} << (x - 1);
    }
    facets.push_back(s);
  }
  const bool allow_empty = j.value("allow_empty", false);
  return SimplicialComplex(m, facets, allow_empty);
}

nlohmann::json SimplicialComplex::to_json() const {
  nlohmann::json j;
  j["m"] = m_;
  j["facets"] = nlohmann::json::array();
  for (FaceSet f : facets_) {
    std::vector<int> verts;
    for (int v : set_members(f)) verts.push_back(v + 1);
    j["facets"].push_back(verts);
  }
  return j;
}

SimplicialComplex SimplicialComplex::full_simplex(int m) {
  return SimplicialComplex(m, {(m == 64) ? ~FaceSet{0} : (FaceSet{1} << m) - 1});
}

SimplicialComplex SimplicialComplex::boundary_simplex(int m) {
  const FaceSet full = (FaceSet{1} << m) - 1;
  std::vector<FaceSet> facets;
  for (int i = 0; i < m; ++i) facets.push_back(full & ~(FaceSet{1} << i));
  return SimplicialComplex(m, facets);
}

SimplicialComplex SimplicialComplex::points(int m) {
  std::vector<FaceSet> facets;
  for (int i = 0; i < m; ++i) facets.push_back(FaceSet{1} << i);
  return SimplicialComplex(m, facets);
}

SimplicialComplex flag_complex(const Graph& g) {
  std::vector<FaceSet> facets;
  for (VertexSet m : maximal_cliques(g)) facets.push_back(m);
  return SimplicialComplex(g.num_vertices(), facets);
}

int Factor::cat_value() const {
  if (graph) return clique_number(*graph);
  return cat;
}

long long Factor::tc_r(int r) const {
  if (graph) return z_r(*graph, r);
  auto it = tc.find(r);
  if (it == tc.end())
    throw std::invalid_argument("factor has no TC_" + std::to_string(r) +
                                " entry");
  return it->second;
}

Factor Factor::from_json(const nlohmann::json& j) {
  Factor f;
  if (j.contains("graph")) {
    f.graph = Graph::from_json(j.at("graph"));
  } else {
    f.cat = j.at("cat").get<int>();
    for (auto it = j.at("tc").begin(); it != j.at("tc").end(); ++it)
      f.tc[std::stoi(it.key())] = it.value().get<long long>();
  }
  return f;
}

nlohmann::json Factor::to_json() const {
  nlohmann::json j;
  if (graph) {
    j["graph"] = graph->to_json();
  } else {
    j["cat"] = cat;
    nlohmann::json t;
    for (auto [r, v] : tc) t[std::to_string(r)] = v;
    j["tc"] = t;
  }
  return j;
}

FactorProfile FactorProfile::of_graphs(std::vector<Graph> graphs) {
  FactorProfile profile;
  bool all_split = true;
  for (auto& g : graphs) {
    all_split = all_split && has_two_disjoint_max_cliques(g);
    Factor f;
    f.graph = std::move(g);
    profile.factors.push_back(std::move(f));
  }
  profile.ls_logarithmic = {true, "graph factors: cat adds under graph join"};
  profile.tc_r_logarithmic = {true, "graph factors: z_r adds under graph join"};
  if (all_split)
    profile.tc_equals_r_cat = {
        true, "every factor has two disjoint maximum cliques"};
  return profile;
}

FactorProfile FactorProfile::from_json(const nlohmann::json& j) {
  const nlohmann::json& arr = j.is_array() ? j : j.at("factors");
  FactorProfile profile;
  bool all_graphs = true;
  std::vector<Graph> graphs;
  for (const auto& entry : arr) {
    Factor f = Factor::from_json(entry);
    all_graphs = all_graphs && f.graph.has_value();
    profile.factors.push_back(std::move(f));
  }
  if (all_graphs) {
    std::vector<Graph> gs;
    for (const auto& f : profile.factors) gs.push_back(*f.graph);
    FactorProfile automatic = FactorProfile::of_graphs(std::move(gs));
    profile.ls_logarithmic = automatic.ls_logarithmic;
    profile.tc_r_logarithmic = automatic.tc_r_logarithmic;
    profile.tc_equals_r_cat = automatic.tc_equals_r_cat;
  }
  if (!j.is_array() && j.contains("flags")) {
    auto read = [&](const char* name, ProfileFlag& flag) {
      if (j.at("flags").contains(name)) {
        const auto& f = j.at("flags").at(name);
        flag.asserted = f.at("asserted").get<bool>();
        flag.provenance = f.value("provenance", "");
      }
    };
    read("ls_logarithmic", profile.ls_logarithmic);
    read("tc_r_logarithmic", profile.tc_r_logarithmic);
    read("tc_equals_r_cat", profile.tc_equals_r_cat);
  }
  return profile;
}

namespace {

void check_sizes(const FactorProfile& profile, const SimplicialComplex& k) {
  if (static_cast<int>(profile.factors.size()) != k.num_vertices())
    throw std::invalid_argument("profile size does not match complex");
}

long long face_sum(const FactorProfile& profile, FaceSet face,
                   const std::function<long long(const Factor&)>& value) {
  long long sum = 0;
  for (int i : set_members(face)) sum += value(profile.factors[i]);
  return sum;
}

}  // namespace

CatResult cat_polyprod(const FactorProfile& profile,
                       const SimplicialComplex& k) {
  check_sizes(profile, k);
  long long best = 0;
  for (FaceSet f : k.facets())
    best = std::max(best, face_sum(profile, f, [](const Factor& x) {
                      return static_cast<long long>(x.cat_value());
                    }));
  return {best, profile.ls_logarithmic.asserted};
}

long long tc_lower(const FactorProfile& profile, const SimplicialComplex& k,
                   int r) {
  check_sizes(profile, k);
  if (r < 2) throw std::invalid_argument("tc_lower requires r >= 2");
  if (!profile.ls_logarithmic.asserted)
    throw std::invalid_argument(
        "tc_lower needs the ls_logarithmic assertion");
  long long best = 0;
  for (FaceSet f : k.facets())
    best = std::max(best, face_sum(profile, f, [&](const Factor& x) {
                      return x.tc_r(r);
                    }));
  // r-tuples of simplices with a disjoint pair: the disjoint pair ranges
  // over all faces, the remaining r-2 slots take the best facet
  long long max_facet_cat = cat_polyprod(profile, k).value;
  auto catsum = [&](FaceSet f) {
    return face_sum(profile, f, [](const Factor& x) {
      return static_cast<long long>(x.cat_value());
    });
  };
  const std::vector<FaceSet> faces = k.all_faces();
  for (size_t i = 0; i < faces.size(); ++i) {
    for (size_t j = i; j < faces.size(); ++j) {
      if ((faces[i] & faces[j]) != 0) continue;
      long long tuple = catsum(faces[i]) + catsum(faces[j]) +
                        static_cast<long long>(r - 2) * max_facet_cat;
      best = std::max(best, tuple);
    }
  }
  return best;
}

TcResult tc_polyprod(const FactorProfile& profile, const SimplicialComplex& k,
                     int r) {
  check_sizes(profile, k);
  if (r < 2) throw std::invalid_argument("tc_polyprod requires r >= 2");
  TcResult result;
  if (profile.ls_logarithmic.asserted && profile.tc_r_logarithmic.asserted &&
      profile.tc_equals_r_cat.asserted) {
    result.exact = true;
    long long best = 0;
    for (FaceSet f : k.facets())
      best = std::max(best, face_sum(profile, f, [&](const Factor& x) {
                        return x.tc_r(r);
                      }));
    result.value = result.lower = result.upper = best;
    return result;
  }
  result.upper = r * cat_polyprod(profile, k).value;
  result.lower = profile.ls_logarithmic.asserted
                     ? tc_lower(profile, k, r)
                     : 0;
  return result;
}

long long join_tc(const std::vector<Graph>& graphs, int r) {
  long long sum = 0;
  for (const auto& g : graphs) sum += z_r(g, r);
  return sum;
}

Graph composite_graph(const std::vector<Graph>& factors,
                      const SimplicialComplex& k) {
  if (static_cast<int>(factors.size()) != k.num_vertices())
    throw std::invalid_argument("factor count does not match complex");
  int total = 0;
  std::vector<int> offset;
  for (const auto& g : factors) {
    offset.push_back(total);
    total += g.num_vertices();
  }
  Graph out(total);
  for (size_t i = 0; i < factors.size(); ++i)
    for (auto [u, v] : factors[i].edges())
      out.add_edge(offset[i] + u, offset[i] + v);
  for (size_t i = 0; i < factors.size(); ++i) {
    for (size_t j = i + 1; j < factors.size(); ++j) {
      FaceSet pair = (FaceSet{1} << i) | (FaceSet{1} << j);
      if (!k.is_face(pair)) continue;
      for (int u = 0; u < factors[i].num_vertices(); ++u)
        for (int v = 0; v < factors[j].num_vertices(); ++v)
          out.add_edge(offset[i] + u, offset[j] + v);
    }
  }
  return out;
}

}  // namespace raatc
