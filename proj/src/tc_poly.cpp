#include "raatc/tc_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "raatc/clique.hpp"

namespace raatc {

IntPolynomial::IntPolynomial(std::vector<long long> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPolynomial::degree() const {
  return static_cast<int>(coeffs_.size()) - 1;
}

long long IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

long long IntPolynomial::eval(long long x) const {
  long long acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

long long IntPolynomial::derivative_at(long long x) const {
  long long acc = 0;
  for (int k = degree(); k >= 1; --k) acc = acc * x + k * coeffs_[k];
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<long long> out(std::max(coeffs_.size(), other.coeffs_.size()),
                             0);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return {};
  std::vector<long long> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::scaled(long long factor) const {
  std::vector<long long> out = coeffs_;
  for (auto& c : out) c *= factor;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = 0; k < static_cast<int>(coeffs_.size()); ++k) {
    long long c = coeffs_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    long long mag = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

nlohmann::json IntPolynomial::to_json() const {
  return nlohmann::json(coeffs_);
}

IntPolynomial IntPolynomial::from_json(const nlohmann::json& j) {
  return IntPolynomial(j.get<std::vector<long long>>());
}

long long TcSequence::tc(int r) const {
  if (r < 1) throw std::invalid_argument("TC_r needs r >= 1");
  if (r == 1) return 0;
  if (r - 2 < static_cast<int>(values.size())) return values[r - 2];
  if (values.empty()) return 0;
  return values.back() + slope * (r - horizon());
}

TcSequence sequence_from_values(std::vector<long long> values) {
  if (values.empty()) throw std::invalid_argument("empty TC window");
  long long prev = 0;
  for (long long v : values) {
    if (v < 0 || v < prev)
      throw std::invalid_argument("TC values must be nondecreasing and >= 0");
    prev = v;
  }
  const int m = static_cast<int>(values.size());
  // d_r = TC_{r+1} - TC_r for r = 1..m, with TC_1 = 0
  std::vector<long long> diffs(m);
  diffs[0] = values[0];
  for (int r = 2; r <= m; ++r) diffs[r - 1] = values[r - 1] - values[r - 2];
  const long long k = diffs[m - 1];
  if (m >= 2 && diffs[m - 2] != k)
    throw std::runtime_error("TC window shows no stabilization");
  int e = m;
  while (e >= 2 && diffs[e - 2] == k) --e;
  TcSequence seq;
  seq.values = std::move(values);
  seq.slope = k;
  seq.e = e;
  return seq;
}

TcSequence tc_sequence(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) {
    TcSequence seq;
    seq.values = {0};
    seq.slope = 0;
    seq.e = 1;
    return seq;
  }
  std::vector<long long> values;
  for (int r = 2; r <= n + 2; ++r) values.push_back(z_r(g, r));
  TcSequence seq = sequence_from_values(std::move(values));
  if (seq.slope != clique_number(g))
    throw std::logic_error("slope disagrees with clique number");
  return seq;
}

IntPolynomial poly_from_sequence(const TcSequence& seq) {
  const IntPolynomial one_minus_x({1, -1});
  IntPolynomial inner;  // sum_{i=2}^{e-1} TC_i x^{i-1}
  {
    std::vector<long long> c(std::max(seq.e - 1, 0), 0);
    for (int i = 2; i <= seq.e - 1; ++i) c[i - 1] = seq.tc(i);
    inner = IntPolynomial(std::move(c));
  }
  std::vector<long long> mid(seq.e, 0);
  mid[seq.e - 1] = seq.tc(seq.e);  // TC_e x^{e-1}
  std::vector<long long> last(seq.e + 1, 0);
  last[seq.e] = seq.slope;  // K x^e
  return one_minus_x * one_minus_x * inner +
         IntPolynomial(std::move(mid)) * one_minus_x +
         IntPolynomial(std::move(last));
}

IdentityReport check_identities(const IntPolynomial& p, const TcSequence& seq) {
  IdentityReport report;
  report.value_at_one = p.eval(1) == seq.slope;
  report.derivative_at_one =
      p.derivative_at(1) == seq.e * seq.slope - seq.tc(seq.e);
  const bool contractible =
      seq.slope == 0 &&
      std::all_of(seq.values.begin(), seq.values.end(),
                  [](long long v) { return v == 0; });
  report.degree_is_e = contractible || p.degree() == seq.e;
  return report;
}

std::vector<long long> series_expand(const IntPolynomial& p, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  // 1/(1-x)^2 = sum (j+1) x^j
  std::vector<long long> out(order + 1, 0);
  for (int j = 0; j <= order; ++j)
    for (int i = 0; i <= std::min(j, p.degree()); ++i)
      out[j] += p.coefficient(i) * (j - i + 1);
  return out;
}

bool lslog_slope_check(const TcSequence& seq, long long cat) {
  return seq.slope == cat;
}

}  // namespace raatc
