#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "raatc/polyhedral.hpp"

namespace raatc {

// TC bounds for polyhedral products of real projective spaces P^{n_i}.

struct ProjProfile {
  std::vector<int> dims;  // n_1..n_m, positive
  // user-supplied exact TC(P^n) values with a provenance note
  std::map<int, std::pair<long long, std::string>> tc_table;

  static ProjProfile from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// zcl(P^n) = 2^theta - 1 for the unique theta with 2^{theta-1} <= n < 2^theta.
long long zcl_pn(int n);

struct TcPnResult {
  bool exact = false;
  long long value = 0;  // meaningful when exact
  long long lower = 0;
  long long upper = 0;
};

// Exact TC(P^n) where known (n in {1,3,7}: value n; n = 2^e, 2^e + 1 with
// e >= 1, or 6: value zcl_pn(n); user table), otherwise [zcl_pn(n), 2n].
TcPnResult tc_pn(int n, const ProjProfile& profile);

struct PairWitness {
  FaceSet sigma1 = 0;
  FaceSet sigma2 = 0;
};

struct BoundInterval {
  long long lower = 0;
  long long upper = 0;
  bool sharp = false;
  PairWitness lower_witness;
  PairWitness upper_witness;

  nlohmann::json to_json() const;
};

// Symmetric-difference norm: max over face pairs of
// sum_{symmetric difference} n_i + sum_{intersection} TC(P^{n_i}).
// Exact (lower == upper) when every involved TC(P^{n_i}) is exact; otherwise
// the interval endpoints use the per-factor TC intervals. The search runs
// over facets (the maximum is attained there); scan_all_faces re-verifies
// over every face for small complexes.
BoundInterval norm_upper(const ProjProfile& profile,
                         const SimplicialComplex& k,
                         bool scan_all_faces = false);

struct ZclLowerResult {
  long long value = 0;
  PairWitness witness;
};

// Same maximum with TC replaced by zcl_pn; the winning witness is re-verified
// through the mod-2 cohomology product (throws std::logic_error on
// disagreement).
ZclLowerResult zcl_lower(const ProjProfile& profile,
                         const SimplicialComplex& k,
                         bool scan_all_faces = false);

// [zcl_lower, norm_upper]; sharp when every factor appearing in a facet has
// exact tc_pn equal to zcl_pn.
BoundInterval tc_bounds(const ProjProfile& profile,
                        const SimplicialComplex& k);

struct HigherTcResult {
  long long value = 0;
  bool caveat = true;
  std::string note;
};

// All n_i even: max over facets of sum r*n_i, valid for large enough r
// (threshold unquantified -- reported as a caveat, never asserted for a
// specific r).
HigherTcResult higher_tc_even(const ProjProfile& profile,
                              const SimplicialComplex& k, int r);

}  // namespace raatc
