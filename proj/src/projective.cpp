#include "raatc/projective.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "raatc/f2_cohomology.hpp"

namespace raatc {

ProjProfile ProjProfile::from_json(const nlohmann::json& j) {
  ProjProfile profile;
  profile.dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("tc_table")) {
    for (auto it = j.at("tc_table").begin(); it != j.at("tc_table").end();
         ++it) {
      const int n = std::stoi(it.key());
      long long value;
      std::string provenance;
      if (it.value().is_object()) {
        value = it.value().at("value").get<long long>();
        provenance = it.value().value("provenance", "");
      } else {
        value = it.value().get<long long>();
      }
      profile.tc_table[n] = {value, provenance};
    }
  }
  for (int n : profile.dims)
    if (n < 1) throw std::invalid_argument("dimensions must be positive");
  return profile;
}

nlohmann::json ProjProfile::to_json() const {
  nlohmann::json j;
  j["dims"] = dims;
  if (!tc_table.empty()) {
    nlohmann::json t;
    for (const auto& [n, entry] : tc_table)
      t[std::to_string(n)] = {{"value", entry.first},
                              {"provenance", entry.second}};
    j["tc_table"] = t;
  }
  return j;
}

long long zcl_pn(int n) {
  return top_zero_divisor_power(n);
}

TcPnResult tc_pn(int n, const ProjProfile& profile) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  const long long zcl = zcl_pn(n);
  auto it = profile.tc_table.find(n);
  if (it != profile.tc_table.end()) {
    const long long v = it->second.first;
    if (v < zcl || v > 2LL * n)
      throw std::invalid_argument("user TC table entry for n=" +
                                  std::to_string(n) +
                                  " lies outside [zcl, 2n]");
  }
  TcPnResult result;
  if (n == 1 || n == 3 || n == 7) {
    result.exact = true;
    result.value = n;
  } else if ((n & (n - 1)) == 0 ||            // n = 2^e
             (n >= 3 && ((n - 1) & (n - 2)) == 0) ||  // n = 2^e + 1, e >= 1
             n == 6) {
    result.exact = true;
    result.value = zcl;
  } else if (it != profile.tc_table.end()) {
    result.exact = true;
    result.value = it->second.first;
  } else {
    result.lower = zcl;
    result.upper = 2LL * n;
    return result;
  }
  result.lower = result.upper = result.value;
  return result;
}

nlohmann::json BoundInterval::to_json() const {
  auto witness_json = [](const PairWitness& w) {
    auto verts = [](FaceSet s) {
      std::vector<int> out;
      for (int v : set_members(s)) out.push_back(v + 1);
      return out;
    };
    return nlohmann::json{{"sigma1", verts(w.sigma1)},
                          {"sigma2", verts(w.sigma2)}};
  };
  return {{"lower", lower},
          {"upper", upper},
          {"sharp", sharp},
          {"lower_witness", witness_json(lower_witness)},
          {"upper_witness", witness_json(upper_witness)}};
}

namespace {

void check_dims(const ProjProfile& profile, const SimplicialComplex& k) {
  if (static_cast<int>(profile.dims.size()) != k.num_vertices())
    throw std::invalid_argument("profile size does not match complex");
  for (int n : profile.dims)
    if (n < 1) throw std::invalid_argument("dimensions must be positive");
}

// max over unordered face pairs of sum_{sym diff} n_i + sum_{int} weight(i);
// first maximizer in the sorted pair order is kept (lexicographically least).
template <typename Weight>
std::pair<long long, PairWitness> best_pair(const std::vector<int>& dims,
                                            const std::vector<FaceSet>& faces,
                                            Weight weight) {
  long long best = 0;
  PairWitness witness;
  bool have = false;
  for (size_t a = 0; a < faces.size(); ++a) {
    for (size_t b = a; b < faces.size(); ++b) {
      long long score = 0;
      for (int i : set_members(faces[a] ^ faces[b])) score += dims[i];
      for (int i : set_members(faces[a] & faces[b])) score += weight(i);
      if (!have || score > best) {
        best = score;
        witness = {faces[a], faces[b]};
        have = true;
      }
    }
  }
  return {best, witness};
}

}  // namespace

BoundInterval norm_upper(const ProjProfile& profile,
                         const SimplicialComplex& k, bool scan_all_faces) {
  check_dims(profile, k);
  const std::vector<FaceSet> faces =
      scan_all_faces ? k.all_faces() : k.facets();
  std::vector<TcPnResult> tc;
  bool all_exact = true;
  for (int n : profile.dims) {
    tc.push_back(tc_pn(n, profile));
    all_exact = all_exact && tc.back().exact;
  }
  auto [lo, lo_wit] = best_pair(profile.dims, faces,
                                [&](int i) { return tc[i].lower; });
  auto [hi, hi_wit] = best_pair(profile.dims, faces,
                                [&](int i) { return tc[i].upper; });
  BoundInterval out;
  out.lower = lo;
  out.upper = hi;
  out.sharp = all_exact;
  out.lower_witness = lo_wit;
  out.upper_witness = hi_wit;
  return out;
}

ZclLowerResult zcl_lower(const ProjProfile& profile,
                         const SimplicialComplex& k, bool scan_all_faces) {
  check_dims(profile, k);
  const std::vector<FaceSet> faces =
      scan_all_faces ? k.all_faces() : k.facets();
  auto [value, witness] = best_pair(profile.dims, faces,
                                    [&](int i) { return zcl_pn(profile.dims[i]); });
  F2Context ctx(profile.dims, k);
  MixedLowerCheck check =
      verify_mixed_lower(ctx, witness.sigma1, witness.sigma2);
  if (!check.ok || !check.element_nonzero)
    throw std::logic_error(
        "internal inconsistency: cohomology check rejected the winning "
        "witness pair");
  return {value, witness};
}

BoundInterval tc_bounds(const ProjProfile& profile,
                        const SimplicialComplex& k) {
  check_dims(profile, k);
  const ZclLowerResult lo = zcl_lower(profile, k);
  const BoundInterval hi = norm_upper(profile, k);
  BoundInterval out;
  out.lower = lo.value;
  out.upper = hi.upper;
  out.lower_witness = lo.witness;
  out.upper_witness = hi.upper_witness;
  FaceSet covered = 0;
  for (FaceSet f : k.facets()) covered |= f;
  out.sharp = true;
  for (int i : set_members(covered)) {
    const TcPnResult tc = tc_pn(profile.dims[i], profile);
    if (!tc.exact || tc.value != zcl_pn(profile.dims[i])) {
      out.sharp = false;
      break;
    }
  }
  return out;
}

HigherTcResult higher_tc_even(const ProjProfile& profile,
                              const SimplicialComplex& k, int r) {
  check_dims(profile, k);
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  for (int n : profile.dims)
    if (n % 2 != 0)
      throw std::invalid_argument("all dimensions must be even");
  HigherTcResult out;
  for (FaceSet f : k.facets()) {
    long long sum = 0;
    for (int i : set_members(f)) sum += static_cast<long long>(r) * profile.dims[i];
    out.value = std::max(out.value, sum);
  }
  out.caveat = true;
  out.note = "valid for large enough r; the threshold is not quantified";
  return out;
}

}  // namespace raatc
