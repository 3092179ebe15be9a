#include "raatc/f2_cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace raatc {

namespace {

void toggle(RingElement& e, Monomial m) {
  auto it = e.find(m);
  if (it != e.end())
    e.erase(it);
  else
    e.insert(std::move(m));
}

void toggle(TensorElement& e, std::pair<Monomial, Monomial> m) {
  auto it = e.find(m);
  if (it != e.end())
    e.erase(it);
  else
    e.insert(std::move(m));
}

}  // namespace

F2Context::F2Context(std::vector<int> dims_in, SimplicialComplex k)
    : dims(std::move(dims_in)), K(std::move(k)) {
  if (static_cast<int>(dims.size()) != K.num_vertices())
    throw std::invalid_argument("dimension list does not match complex");
  for (int n : dims)
    if (n < 1) throw std::invalid_argument("factor dimensions must be >= 1");
}

bool F2Context::admissible(const Monomial& mono) const {
  FaceSet support = 0;
  for (int i = 0; i < num_factors(); ++i) {
    if (mono[i] < 0 || mono[i] > dims[i]) return false;
    if (mono[i] > 0) support |= FaceSet{1} << i;
  }
  return K.is_face(support);
}

int top_zero_divisor_power(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  int theta = 1;
  while ((1 << theta) <= n) ++theta;
  return (1 << theta) - 1;
}

RingElement multiply(const RingElement& a, const RingElement& b,
                     const F2Context& ctx) {
  RingElement out;
  const int m = ctx.num_factors();
  for (const Monomial& x : a) {
    for (const Monomial& y : b) {
      Monomial prod(m);
      for (int i = 0; i < m; ++i) prod[i] = x[i] + y[i];
      if (!ctx.admissible(prod)) continue;
      toggle(out, std::move(prod));
    }
  }
  return out;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b,
                              const F2Context& ctx) {
  TensorElement out;
  const int m = ctx.num_factors();
  for (const auto& [xl, xr] : a) {
    for (const auto& [yl, yr] : b) {
      Monomial left(m), right(m);
      for (int i = 0; i < m; ++i) {
        left[i] = xl[i] + yl[i];
        right[i] = xr[i] + yr[i];
      }
      if (!ctx.admissible(left) || !ctx.admissible(right)) continue;
      toggle(out, {std::move(left), std::move(right)});
    }
  }
  return out;
}

TensorElement zd_power(int i, int p, const F2Context& ctx) {
  if (p < 0) throw std::invalid_argument("power must be >= 0");
  if (i < 0 || i >= ctx.num_factors())
    throw std::invalid_argument("factor index out of range");
  TensorElement out;
  const int m = ctx.num_factors();
  for (int k = 0; k <= p; ++k) {
    if ((k & p) != k) continue;  // C(p,k) even
    Monomial left(m, 0), right(m, 0);
    left[i] = p - k;
    right[i] = k;
    if (!ctx.admissible(left) || !ctx.admissible(right)) continue;
    out.insert({std::move(left), std::move(right)});
  }
  return out;
}

MixedLowerCheck verify_mixed_lower(const F2Context& ctx, FaceSet sigma1,
                                   FaceSet sigma2) {
  if (!ctx.K.is_face(sigma1) || !ctx.K.is_face(sigma2))
    throw std::invalid_argument("arguments must be faces of the complex");
  const int m = ctx.num_factors();
  Monomial one(m, 0);
  TensorElement product;
  product.insert({one, one});
  const FaceSet sym = sigma1 ^ sigma2;
  const FaceSet both = sigma1 & sigma2;
  for (int i : set_members(sym))
    product = tensor_multiply(product, zd_power(i, ctx.dims[i], ctx), ctx);
  for (int i : set_members(both))
    product = tensor_multiply(
        product, zd_power(i, top_zero_divisor_power(ctx.dims[i]), ctx), ctx);
  MixedLowerCheck check;
  check.left = Monomial(m, 0);
  check.right = Monomial(m, 0);
  for (int i : set_members(sigma1 & ~sigma2)) check.left[i] = ctx.dims[i];
  for (int i : set_members(sigma2 & ~sigma1)) check.right[i] = ctx.dims[i];
  for (int i : set_members(both)) {
    check.left[i] = ctx.dims[i];
    check.right[i] = top_zero_divisor_power(ctx.dims[i]) - ctx.dims[i];
  }
  check.ok = product.count({check.left, check.right}) > 0;
  check.element_nonzero = !product.empty();
  return check;
}

long long zcl_search(const F2Context& ctx, long long budget) {
  long long state_space = 1;
  for (int n : ctx.dims) {
    state_space *= n + 1;
    if (state_space > budget)
      throw std::invalid_argument("search budget exceeded");
  }
  const int m = ctx.num_factors();
  Monomial one(m, 0);
  TensorElement unit;
  unit.insert({one, one});
  long long best = 0;
  // depth-first over per-factor powers, pruning zero partial products
  auto dfs = [&](auto&& self, int i, const TensorElement& acc,
                 long long total) -> void {
    best = std::max(best, total);
    if (i == m) return;
    self(self, i + 1, acc, total);  // p_i = 0
    const int cap = top_zero_divisor_power(ctx.dims[i]);
    for (int p = 1; p <= cap; ++p) {
      TensorElement next = tensor_multiply(acc, zd_power(i, p, ctx), ctx);
      if (next.empty()) continue;
      self(self, i + 1, next, total + p);
    }
  };
  dfs(dfs, 0, unit, 0);
  return best;
}

}  // namespace raatc
