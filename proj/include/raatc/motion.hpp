#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "raatc/polyhedral.hpp"

namespace raatc {

// Explicit motion planner for polyhedral products whose factors are the
// projective spaces of dimension 1, 3 or 7 -- the dimensions carrying a
// division-algebra multiplication, for which TC(P^n) = n.

constexpr double kZeroTolerance = 1e-9;

bool planner_dim(int n);  // n in {1, 3, 7}

// x * conj(y) in complex / quaternion / octonion arithmetic (Cayley-Dickson
// doubling). Nonsingular: zero output forces a zero input.
std::vector<double> division_mult(const std::vector<double>& x,
                                  const std::vector<double>& y);

// Point of P^n as a unit representative with the first nonzero coordinate
// positive; constructor normalizes and applies the sign convention.
class ProjPoint {
 public:
  explicit ProjPoint(std::vector<double> v);
  static ProjPoint base_point(int dim);  // class of (1,0,...,0)

  int dim() const { return static_cast<int>(v_.size()) - 1; }
  const std::vector<double>& vector() const { return v_; }
  bool is_base(double tol = kZeroTolerance) const;

 private:
  std::vector<double> v_;
};

// Normalized line metric: angle between the lines divided by pi, in
// [0, 1/2]; geodesic diameter of P^n is 1/2.
double line_distance(const ProjPoint& a, const ProjPoint& b);

// Index of the first coordinate of division_mult(a, b) with absolute value
// above the tolerance. Diagonal pairs give 0; throws on numerical
// degeneracy (all coordinates below tolerance).
int zero_count(const ProjPoint& a, const ProjPoint& b,
               double tol = kZeroTolerance);

struct Configuration {
  std::vector<ProjPoint> points;

  // validates that the support {i : A_i != *} is a face of k
  Configuration(std::vector<ProjPoint> pts, const SimplicialComplex& k,
                double tol = kZeroTolerance);

  FaceSet support(double tol = kZeroTolerance) const;
  static Configuration from_json(const nlohmann::json& j,
                                 const SimplicialComplex& k);
  nlohmann::json to_json() const;
};

struct StratumLabel {
  std::vector<int> per_factor;
  long long total = 0;
};

StratumLabel stratum(const Configuration& c1, const Configuration& c2,
                     double tol = kZeroTolerance);

// Per-factor piecewise path: hold at the start until t_move_start, rotate at
// constant speed through angle `angle` in the plane spanned by `start_rep`
// and `perp`, then hold at the end from t_move_end on.
struct FactorPath {
  std::vector<double> start_rep;  // unit representative a of A_1
  std::vector<double> perp;       // unit, orthogonal to a, toward b
  double angle = 0;               // rotation angle in [0, pi/2]
  double t_move_start = 0;        // 1/2 - d(A_1, *)
  double t_move_end = 1;          // 1/2 + d(A_2, *)
};

struct PathSpec {
  std::vector<FactorPath> factors;
};

// The stratum-wise section: per factor, hold at A_{i1} until
// 1/2 - d(A_{i1},*), rotate toward A_{i2} (representative sign fixed so the
// first surviving coordinate of x * conj(y) is positive), arrive by
// 1/2 + d(A_{i2},*), hold.
PathSpec plan(const Configuration& c1, const Configuration& c2,
              double tol = kZeroTolerance);

Configuration eval_path(const PathSpec& spec, double t,
                        const SimplicialComplex& k);

struct AuditReport {
  int samples = 0;
  long long bound = 0;        // symmetric-difference norm of the dims
  long long max_total_z = 0;
  bool labels_valid = true;        // (a) every pair gets one valid label
  bool bound_respected = true;     // (b) total Z <= bound
  bool membership = true;          // (c) paths stay in the product
  bool continuity = true;          // (d) sup distance shrinks with delta
  bool separation = true;          // (e) coordinates below the label vanish
  std::vector<double> continuity_ratios;  // sup-dist / delta per probe
  std::vector<std::string> failures;      // counterexample dumps (JSON text)

  bool all_pass() const;
  nlohmann::json to_json() const;
};

AuditReport audit(const SimplicialComplex& k, const std::vector<int>& dims,
                  int samples, std::uint64_t seed,
                  double tol = kZeroTolerance);

}  // namespace raatc
