#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "raatc/graph.hpp"

namespace raatc {

// Integer polynomial, coefficient index = degree, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coefficients);

  // -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  long long coefficient(int k) const;
  const std::vector<long long>& coefficients() const { return coeffs_; }

  long long eval(long long x) const;
  long long derivative_at(long long x) const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial scaled(long long factor) const;
  bool operator==(const IntPolynomial& other) const = default;

  // Human form by ascending powers with explicit signs, e.g. "5x - x^2 - x^3".
  std::string to_string() const;
  nlohmann::json to_json() const;  // ascending coefficient array
  static IntPolynomial from_json(const nlohmann::json& j);

 private:
  std::vector<long long> coeffs_;
};

// TC_2, TC_3, ... up to a horizon, with eventual slope K from index e on
// (convention TC_1 = 0).
struct TcSequence {
  std::vector<long long> values;  // values[i] = TC_{i+2}
  long long slope = 0;            // K
  int e = 1;                      // minimal stabilization index

  long long tc(int r) const;  // r >= 1; extends linearly past the horizon
  int horizon() const { return static_cast<int>(values.size()) + 1; }
};

// values = z_r(g) for r = 2..|V|+2, slope = c(g). Empty graph yields the
// contractible sequence (all zeros, K = 0, e = 1).
TcSequence tc_sequence(const Graph& g);

// Builds a TcSequence directly from values (TC_2, TC_3, ...); validates the
// invariants and derives slope and e. Fails loudly if the window never
// stabilizes.
TcSequence sequence_from_values(std::vector<long long> values);

// P(x) = (1-x)^2 * sum_{i=2}^{e-1} TC_i x^{i-1} + TC_e x^{e-1}(1-x) + K x^e.
IntPolynomial poly_from_sequence(const TcSequence& seq);

struct IdentityReport {
  bool value_at_one = false;       // P(1) = K
  bool derivative_at_one = false;  // P'(1) = e*K - TC_e
  bool degree_is_e = false;        // deg(P) = e (non-contractible case)
  bool all() const { return value_at_one && derivative_at_one && degree_is_e; }
};

IdentityReport check_identities(const IntPolynomial& p, const TcSequence& seq);

// Coefficients of P(x)/(1-x)^2 through degree order; coefficient at x^r
// equals TC_{r+1}.
std::vector<long long> series_expand(const IntPolynomial& p, int order);

// For LS-logarithmic spaces the eventual slope equals cat.
bool lslog_slope_check(const TcSequence& seq, long long cat);

}  // namespace raatc
