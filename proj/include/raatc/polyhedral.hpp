#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "raatc/graph.hpp"

namespace raatc {

// Face of a complex on [m], stored 0-based as a bitmask.
using FaceSet = std::uint64_t;

// Simplicial complex given by its facets (pairwise non-contained maximal
// faces). JSON vertices are 1-based.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int m, std::vector<FaceSet> facets,
                    bool allow_empty = false);

  int num_vertices() const { return m_; }
  const std::vector<FaceSet>& facets() const { return facets_; }
  bool is_face(FaceSet s) const;
  std::vector<FaceSet> all_faces() const;  // includes the empty face
  int dimension() const;                   // -1 for the empty complex

  static SimplicialComplex parse(const nlohmann::json& j);
  nlohmann::json to_json() const;

  static SimplicialComplex full_simplex(int m);
  static SimplicialComplex boundary_simplex(int m);  // all (m-1)-subsets
  static SimplicialComplex points(int m);            // m isolated vertices

 private:
  int m_ = 0;
  std::vector<FaceSet> facets_;
};

// Faces = all cliques of g (facets = maximal cliques).
SimplicialComplex flag_complex(const Graph& g);

// One polyhedral-product factor: either a graph (cat = clique number,
// TC_r = z_r) or explicit cat/TC data.
struct Factor {
  std::optional<Graph> graph;
  int cat = 0;
  std::map<int, long long> tc;  // r -> TC_r, for explicit factors

  int cat_value() const;
  long long tc_r(int r) const;

  static Factor from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// Caller assertion recorded with a provenance string; operations that need
// a flag refuse an exact verdict without it.
struct ProfileFlag {
  bool asserted = false;
  std::string provenance;
};

struct FactorProfile {
  std::vector<Factor> factors;
  ProfileFlag ls_logarithmic;
  ProfileFlag tc_r_logarithmic;
  ProfileFlag tc_equals_r_cat;

  // Auto-sets the flags that hold for all-graph profiles.
  static FactorProfile of_graphs(std::vector<Graph> graphs);
  static FactorProfile from_json(const nlohmann::json& j);
};

struct CatResult {
  long long value = 0;
  bool exact = false;  // exact iff ls_logarithmic asserted
};

CatResult cat_polyprod(const FactorProfile& profile,
                       const SimplicialComplex& k);

struct TcResult {
  bool exact = false;
  long long value = 0;  // meaningful when exact
  long long lower = 0;
  long long upper = 0;
};

TcResult tc_polyprod(const FactorProfile& profile, const SimplicialComplex& k,
                     int r);

// max of (a) best facet sum of TC_r and (b) best r-tuple of facets with a
// disjoint pair, scored by cat sums. Needs ls_logarithmic.
long long tc_lower(const FactorProfile& profile, const SimplicialComplex& k,
                   int r);

// Sum of z_r over the factors (= z_r of the join).
long long join_tc(const std::vector<Graph>& graphs, int r);

// The graph whose RAA group matches the polyhedral product of the factor
// graphs over k: factor adjacencies plus cross edges for co-facial factors.
Graph composite_graph(const std::vector<Graph>& factors,
                      const SimplicialComplex& k);

}  // namespace raatc
