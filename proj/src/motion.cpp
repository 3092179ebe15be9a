#include "raatc/motion.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "raatc/projective.hpp"

namespace raatc {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> cd_conj(const std::vector<double>& x) {
  std::vector<double> out = x;
  for (size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

// Cayley-Dickson product: (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
std::vector<double> cd_mult(const std::vector<double>& x,
                            const std::vector<double>& y) {
  const size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const size_t h = n / 2;
  const std::vector<double> a(x.begin(), x.begin() + h);
  const std::vector<double> b(x.begin() + h, x.end());
  const std::vector<double> c(y.begin(), y.begin() + h);
  const std::vector<double> d(y.begin() + h, y.end());
  const std::vector<double> first_a = cd_mult(a, c);
  const std::vector<double> first_b = cd_mult(cd_conj(d), b);
  const std::vector<double> second_a = cd_mult(d, a);
  const std::vector<double> second_b = cd_mult(b, cd_conj(c));
  std::vector<double> out(n);
  for (size_t i = 0; i < h; ++i) {
    out[i] = first_a[i] - first_b[i];
    out[h + i] = second_a[i] + second_b[i];
  }
  return out;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace

bool planner_dim(int n) { return n == 1 || n == 3 || n == 7; }

std::vector<double> division_mult(const std::vector<double>& x,
                                  const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("dimension mismatch");
  const size_t n = x.size();
  if (n != 2 && n != 4 && n != 8)
    throw std::invalid_argument("vectors must have length 2, 4 or 8");
  return cd_mult(x, cd_conj(y));
}

ProjPoint::ProjPoint(std::vector<double> v) : v_(std::move(v)) {
  if (!planner_dim(static_cast<int>(v_.size()) - 1))
    throw std::invalid_argument("point dimension must be 1, 3 or 7");
  const double norm = std::sqrt(dot(v_, v_));
  if (norm < 1e-12) throw std::invalid_argument("zero vector");
  for (double& c : v_) c /= norm;
  for (double c : v_) {
    if (std::abs(c) > 1e-12) {
      if (c < 0)
        for (double& d : v_) d = -d;
      break;
    }
  }
}

ProjPoint ProjPoint::base_point(int dim) {
  std::vector<double> v(dim + 1, 0.0);
  v[0] = 1.0;
  return ProjPoint(std::move(v));
}

bool ProjPoint::is_base(double tol) const {
  return line_distance(*this, base_point(dim())) <= tol;
}

double line_distance(const ProjPoint& a, const ProjPoint& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  // angle between the lines via atan2 of the orthogonal component: exact to
  // machine precision near 0, where acos(|dot|) loses half the digits
  const double c = dot(a.vector(), b.vector());
  double n2 = 0;
  for (size_t j = 0; j < a.vector().size(); ++j) {
    const double w = b.vector()[j] - c * a.vector()[j];
    n2 += w * w;
  }
  return std::atan2(std::sqrt(n2), std::abs(c)) / kPi;
}

int zero_count(const ProjPoint& a, const ProjPoint& b, double tol) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  const std::vector<double> f = division_mult(a.vector(), b.vector());
  for (size_t j = 0; j < f.size(); ++j)
    if (std::abs(f[j]) > tol) return static_cast<int>(j);
  throw std::runtime_error(
      "numerical degeneracy: all product coordinates below tolerance");
}

Configuration::Configuration(std::vector<ProjPoint> pts,
                             const SimplicialComplex& k, double tol)
    : points(std::move(pts)) {
  if (static_cast<int>(points.size()) != k.num_vertices())
    throw std::invalid_argument("point count does not match complex");
  if (!k.is_face(support(tol)))
    throw std::invalid_argument("support is not a face of the complex");
}

FaceSet Configuration::support(double tol) const {
  FaceSet s = 0;
  for (size_t i = 0; i < points.size(); ++i)
    if (!points[i].is_base(tol)) s |= FaceSet{1} << i;
  return s;
}

Configuration Configuration::from_json(const nlohmann::json& j,
                                       const SimplicialComplex& k) {
  std::vector<ProjPoint> pts;
  for (const auto& v : j.at("points"))
    pts.emplace_back(v.get<std::vector<double>>());
  return Configuration(std::move(pts), k);
}

nlohmann::json Configuration::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points) pts.push_back(p.vector());
  return {{"points", pts}};
}

StratumLabel stratum(const Configuration& c1, const Configuration& c2,
                     double tol) {
  if (c1.points.size() != c2.points.size())
    throw std::invalid_argument("configurations have different sizes");
  StratumLabel label;
  for (size_t i = 0; i < c1.points.size(); ++i) {
    const int k = zero_count(c1.points[i], c2.points[i], tol);
    label.per_factor.push_back(k);
    label.total += k;
  }
  return label;
}

PathSpec plan(const Configuration& c1, const Configuration& c2, double tol) {
  if (c1.points.size() != c2.points.size())
    throw std::invalid_argument("configurations have different sizes");
  PathSpec spec;
  for (size_t i = 0; i < c1.points.size(); ++i) {
    const ProjPoint& A1 = c1.points[i];
    const ProjPoint& A2 = c2.points[i];
    FactorPath fp;
    fp.start_rep = A1.vector();
    fp.t_move_start = 0.5 - line_distance(A1, ProjPoint::base_point(A1.dim()));
    fp.t_move_end = 0.5 + line_distance(A2, ProjPoint::base_point(A2.dim()));
    const double d = line_distance(A1, A2);
    if (d <= tol) {
      fp.angle = 0;
      fp.perp = std::vector<double>(A1.dim() + 1, 0.0);
    } else {
      const int k = zero_count(A1, A2, tol);
      std::vector<double> b = A2.vector();
      // pick the representative of A2 joined by the short rotation: the
      // first surviving coordinate of a * conj(b) must be positive, and
      // (a,b) ~ (-a,-b) gives the same orientation
      const std::vector<double> f = division_mult(fp.start_rep, b);
      if (f[k] < 0)
        for (double& c : b) c = -c;
      const double cosang =
          std::clamp(dot(fp.start_rep, b), -1.0, 1.0);
      fp.angle = std::acos(cosang);
      std::vector<double> perp(b.size());
      for (size_t j = 0; j < b.size(); ++j)
        perp[j] = b[j] - cosang * fp.start_rep[j];
      const double norm = std::sqrt(dot(perp, perp));
      for (double& c : perp) c /= norm;
      fp.perp = std::move(perp);
    }
    spec.factors.push_back(std::move(fp));
  }
  return spec;
}

Configuration eval_path(const PathSpec& spec, double t,
                        const SimplicialComplex& k) {
  if (t < 0 || t > 1) throw std::invalid_argument("time must lie in [0,1]");
  std::vector<ProjPoint> pts;
  for (const FactorPath& fp : spec.factors) {
    double s = 0;
    if (fp.angle > 0 && t > fp.t_move_start) {
      const double len = fp.t_move_end - fp.t_move_start;
      s = (len <= 0) ? 1.0
                     : std::clamp((t - fp.t_move_start) / len, 0.0, 1.0);
    }
    std::vector<double> v(fp.start_rep.size());
    const double c = std::cos(s * fp.angle), sn = std::sin(s * fp.angle);
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = c * fp.start_rep[j] + sn * fp.perp[j];
    pts.emplace_back(std::move(v));
  }
  return Configuration(std::move(pts), k);
}

bool AuditReport::all_pass() const {
  return labels_valid && bound_respected && membership && continuity &&
         separation && failures.empty();
}

nlohmann::json AuditReport::to_json() const {
  nlohmann::json j;
  j["samples"] = samples;
  j["bound"] = bound;
  j["max_total_z"] = max_total_z;
  j["checks"] = {{"labels_valid", labels_valid},
                 {"bound_respected", bound_respected},
                 {"membership", membership},
                 {"continuity", continuity},
                 {"separation", separation}};
  j["continuity_ratios"] = continuity_ratios;
  j["all_pass"] = all_pass();
  j["counterexamples"] = nlohmann::json::array();
  for (const auto& f : failures)
    j["counterexamples"].push_back(nlohmann::json::parse(f));
  return j;
}

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

ProjPoint gaussian_point(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::vector<double> v(dim + 1);
    for (double& c : v) c = gauss(rng);
    double norm = 0;
    for (double c : v) norm += c * c;
    if (norm > 1e-6) return ProjPoint(std::move(v));
  }
}

// half the draws are coordinate axes so that the measure-zero higher strata
// (orthogonal pairs, delayed first nonzero product coordinate) get exercised
ProjPoint random_point(int dim, std::mt19937_64& rng) {
  if (rng() % 2 == 0) {
    std::vector<double> v(dim + 1, 0.0);
    v[rng() % (dim + 1)] = 1.0;
    return ProjPoint(std::move(v));
  }
  return gaussian_point(dim, rng);
}

Configuration random_configuration(const SimplicialComplex& k,
                                   const std::vector<int>& dims, FaceSet face,
                                   std::mt19937_64& rng) {
  std::vector<ProjPoint> pts;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (face & (FaceSet{1} << i))
      pts.push_back(random_point(dims[i], rng));
    else
      pts.push_back(ProjPoint::base_point(dims[i]));
  }
  return Configuration(std::move(pts), k);
}

double configuration_distance(const Configuration& a, const Configuration& b) {
  double d = 0;
  for (size_t i = 0; i < a.points.size(); ++i)
    d = std::max(d, line_distance(a.points[i], b.points[i]));
  return d;
}

// rotate each non-base point of the configuration by line distance delta
Configuration perturb(const Configuration& c, FaceSet face, double delta,
                      const SimplicialComplex& k, std::mt19937_64& rng) {
  std::vector<ProjPoint> pts;
  for (size_t i = 0; i < c.points.size(); ++i) {
    if (!(face & (FaceSet{1} << i))) {
      pts.push_back(c.points[i]);
      continue;
    }
    const std::vector<double>& v = c.points[i].vector();
    std::vector<double> perp(v.size());
    double norm = 0;
    do {  // gaussian direction, retried until it leaves the point's line
      const ProjPoint w = gaussian_point(c.points[i].dim(), rng);
      const double proj = dot(v, w.vector());
      norm = 0;
      for (size_t j = 0; j < v.size(); ++j) {
        perp[j] = w.vector()[j] - proj * v[j];
        norm += perp[j] * perp[j];
      }
      norm = std::sqrt(norm);
    } while (norm < 1e-6);
    const double ang = delta * kPi;
    std::vector<double> out(v.size());
    for (size_t j = 0; j < v.size(); ++j)
      out[j] = std::cos(ang) * v[j] + std::sin(ang) * perp[j] / norm;
    pts.emplace_back(std::move(out));
  }
  return Configuration(std::move(pts), k);
}

}  // namespace

AuditReport audit(const SimplicialComplex& k, const std::vector<int>& dims,
                  int samples, std::uint64_t seed, double tol) {
  if (static_cast<int>(dims.size()) != k.num_vertices())
    throw std::invalid_argument("dimension list does not match complex");
  for (int n : dims)
    if (!planner_dim(n))
      throw std::invalid_argument("factor dimensions must be 1, 3 or 7");
  if (samples < 1) throw std::invalid_argument("need at least one sample");

  AuditReport report;
  report.samples = samples;
  ProjProfile profile;
  profile.dims = dims;
  report.bound = norm_upper(profile, k).upper;

  const std::vector<FaceSet> faces = k.all_faces();
  const int probe_samples = std::min(samples, 8);
  const double deltas[] = {1e-2, 1e-3, 1e-4};

  for (int idx = 0; idx < samples; ++idx) {
    std::mt19937_64 rng = sample_rng(seed, static_cast<std::uint64_t>(idx));
    std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
    const FaceSet f1 = faces[pick(rng)];
    const FaceSet f2 = faces[pick(rng)];
    const Configuration c1 = random_configuration(k, dims, f1, rng);
    const Configuration c2 = random_configuration(k, dims, f2, rng);

    auto dump = [&](const char* check, nlohmann::json extra) {
      nlohmann::json j = {{"sample", idx},
                          {"check", check},
                          {"c1", c1.to_json()},
                          {"c2", c2.to_json()}};
      j.update(extra);
      report.failures.push_back(j.dump());
    };

    StratumLabel label;
    try {
      label = stratum(c1, c2, tol);
    } catch (const std::exception& e) {
      report.labels_valid = false;
      dump("a", {{"error", e.what()}});
      continue;
    }
    // (a) one valid label per pair
    for (size_t i = 0; i < label.per_factor.size(); ++i) {
      if (label.per_factor[i] < 0 || label.per_factor[i] > dims[i]) {
        report.labels_valid = false;
        dump("a", {{"label", label.per_factor}});
      }
    }
    // (b) total never exceeds the norm
    report.max_total_z = std::max(report.max_total_z, label.total);
    if (label.total > report.bound) {
      report.bound_respected = false;
      dump("b", {{"total", label.total}});
    }
    // (e) coordinates below the label index vanish
    for (size_t i = 0; i < label.per_factor.size(); ++i) {
      const std::vector<double> f =
          division_mult(c1.points[i].vector(), c2.points[i].vector());
      for (int j = 0; j < label.per_factor[i]; ++j) {
        if (std::abs(f[j]) > tol) {
          report.separation = false;
          dump("e", {{"factor", i}, {"coordinate", j}, {"value", f[j]}});
        }
      }
    }
    // (c) planned path stays inside the product, endpoints reproduced
    const PathSpec spec = plan(c1, c2, tol);
    bool member_ok = true;
    for (int step = 0; step < 256 && member_ok; ++step) {
      const double t = static_cast<double>(step) / 255.0;
      try {
        const Configuration at = eval_path(spec, t, k);
        if (step == 0 && configuration_distance(at, c1) > 1e-9) {
          member_ok = false;
          dump("c", {{"t", t}, {"reason", "start endpoint mismatch"}});
        }
        if (step == 255 && configuration_distance(at, c2) > 1e-9) {
          member_ok = false;
          dump("c", {{"t", t}, {"reason", "end endpoint mismatch"}});
        }
      } catch (const std::exception& e) {
        member_ok = false;
        dump("c", {{"t", t}, {"error", e.what()}});
      }
    }
    report.membership = report.membership && member_ok;

    // (d) continuity probe on the first few samples: nearby second endpoint
    // in the same stratum must give a uniformly nearby path
    if (idx < probe_samples) {
      double prev_sup = -1;
      bool comparable = true;
      for (double delta : deltas) {
        Configuration c2p = perturb(c2, f2, delta, k, rng);
        StratumLabel lp;
        try {
          lp = stratum(c1, c2p, tol);
        } catch (const std::exception&) {
          comparable = false;
          break;
        }
        if (lp.per_factor != label.per_factor) {
          comparable = false;  // left the stratum; probe not applicable
          break;
        }
        const PathSpec sp = plan(c1, c2p, tol);
        double sup = 0;
        for (int step = 0; step < 256; ++step) {
          const double t = static_cast<double>(step) / 255.0;
          sup = std::max(sup, configuration_distance(eval_path(spec, t, k),
                                                     eval_path(sp, t, k)));
        }
        report.continuity_ratios.push_back(sup / delta);
        if (!std::isfinite(sup / delta) ||
            (prev_sup >= 0 && sup > prev_sup + 1e-12)) {
          report.continuity = false;
          dump("d", {{"delta", delta}, {"sup", sup}, {"prev_sup", prev_sup}});
        }
        prev_sup = sup;
      }
      (void)comparable;
    }
  }
  return report;
}

}  // namespace raatc
