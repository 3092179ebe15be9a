#pragma once

#include <set>
#include <utility>
#include <vector>

#include "raatc/polyhedral.hpp"

namespace raatc {

// Mod-2 cohomology of the product-of-projective-spaces polyhedral product:
// truncated Stanley-Reisner ring on generators u_1..u_m with u_i^{n_i+1} = 0
// and monomial supports constrained to faces of K.

// Exponent vector (e_1..e_m); admissible iff e_i <= n_i and the support is a
// face of K.
using Monomial = std::vector<int>;

// F2 coefficients: an element is the set of its monomials, addition is xor.
using RingElement = std::set<Monomial>;
using TensorElement = std::set<std::pair<Monomial, Monomial>>;

struct F2Context {
  std::vector<int> dims;  // n_1..n_m, all >= 1
  SimplicialComplex K;

  F2Context(std::vector<int> dims, SimplicialComplex K);

  int num_factors() const { return static_cast<int>(dims.size()); }
  bool admissible(const Monomial& mono) const;
};

// Largest p with (u o 1 + 1 o u)^p nonzero for a single P^n factor:
// 2^theta - 1 where 2^{theta-1} <= n < 2^theta.
int top_zero_divisor_power(int n);

RingElement multiply(const RingElement& a, const RingElement& b,
                     const F2Context& ctx);
TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const F2Context& ctx);

// (u_i o 1 + 1 o u_i)^p via Lucas (C(p,k) odd iff k is a submask of p),
// truncated by admissibility on each side.
TensorElement zd_power(int i, int p, const F2Context& ctx);

struct MixedLowerCheck {
  bool ok = false;              // distinguished coordinate survives
  bool element_nonzero = false; // full product is nonzero
  Monomial left;                // the distinguished pair
  Monomial right;
};

// Verifies the zero-divisor product behind the mixed lower bound: the product
// of (u_i o 1 + 1 o u_i)^{n_i} over the symmetric difference of the faces and
// (u_i o 1 + 1 o u_i)^{zcl} over their intersection, checked against the
// distinguished basis pair that can only arise one way.
MixedLowerCheck verify_mixed_lower(const F2Context& ctx, FaceSet sigma1,
                                   FaceSet sigma2);

// Largest total power sum p_1+..+p_m with a nonvanishing product of powers of
// the standard zero-divisors; a lower bound for the true zero-divisor
// cup-length. Requires prod(n_i + 1) <= budget.
long long zcl_search(const F2Context& ctx, long long budget);

}  // namespace raatc
