#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "raatc/f2_cohomology.hpp"

using namespace raatc;

namespace {

RingElement mono(std::vector<int> exps) { return {std::move(exps)}; }

}  // namespace

TEST_CASE("top power formula") {
  CHECK(top_zero_divisor_power(1) == 1);
  CHECK(top_zero_divisor_power(2) == 3);
  CHECK(top_zero_divisor_power(3) == 3);
  CHECK(top_zero_divisor_power(4) == 7);
  CHECK(top_zero_divisor_power(6) == 7);
  CHECK(top_zero_divisor_power(8) == 15);
  CHECK_THROWS_AS(top_zero_divisor_power(0), std::invalid_argument);
}

TEST_CASE("ring multiplication with truncation") {
  const F2Context ctx({2, 2}, SimplicialComplex::points(2));
  // power truncation: u1 * u1^2 = 0
  CHECK(multiply(mono({1, 0}), mono({2, 0}), ctx).empty());
  // support outside the complex: u1 * u2 = 0 over two points
  CHECK(multiply(mono({1, 0}), mono({0, 1}), ctx).empty());
  // and survives when {1,2} is a face
  const F2Context full(std::vector<int>{2, 2},
                       SimplicialComplex::full_simplex(2));
  CHECK(multiply(mono({1, 0}), mono({0, 1}), full) == mono({1, 1}));
  // xor semantics: (u1 + u2)^2 = u1^2 + u2^2 over F2
  const RingElement sum = {{1, 0}, {0, 1}};
  CHECK(multiply(sum, sum, full) == RingElement{{2, 0}, {0, 2}});
}

TEST_CASE("multiplication is associative on random elements") {
  const F2Context ctx({3, 2}, SimplicialComplex::full_simplex(2));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto random_element = [&]() {
      RingElement e;
      for (int i = 0; i < 3; ++i) {
        Monomial m = {static_cast<int>(rng() % 4),
                      static_cast<int>(rng() % 3)};
        if (ctx.admissible(m)) e.insert(m);
      }
      return e;
    };
    const RingElement a = random_element(), b = random_element(),
                      c = random_element();
    CHECK(multiply(multiply(a, b, ctx), c, ctx) ==
          multiply(a, multiply(b, c, ctx), ctx));
  }
}

TEST_CASE("zero divisor powers") {
  const F2Context ctx({2}, SimplicialComplex::full_simplex(1));
  CHECK(zd_power(0, 0, ctx) == TensorElement{{{0}, {0}}});
  // p = 3 over n = 2: C(3,k) all odd, k = 0 and 3 truncated away
  CHECK(zd_power(0, 3, ctx) == TensorElement{{{2}, {1}}, {{1}, {2}}});
  // p = 4: only k = 2 fits the truncation and C(4,2) is even
  CHECK(zd_power(0, 4, ctx).empty());
}

TEST_CASE("threshold matches the closed formula") {
  for (int n = 1; n <= 16; ++n) {
    const F2Context ctx({n}, SimplicialComplex::full_simplex(1));
    const int top = top_zero_divisor_power(n);
    CHECK(!zd_power(0, top, ctx).empty());
    CHECK(zd_power(0, top + 1, ctx).empty());
  }
}

TEST_CASE("mixed lower bound verification") {
  // single point, n = 2: certifies the cup-length 3
  const F2Context point({2}, SimplicialComplex::full_simplex(1));
  const MixedLowerCheck single = verify_mixed_lower(point, 0b1, 0b1);
  CHECK(single.ok);
  CHECK(single.element_nonzero);
  CHECK(single.left == Monomial{2});
  CHECK(single.right == Monomial{1});

  // hollow triangle with n = (2,2,2): the mixed pair certifies 7
  const F2Context tri({2, 2, 2}, SimplicialComplex::boundary_simplex(3));
  const MixedLowerCheck mixed = verify_mixed_lower(tri, 0b011, 0b101);
  CHECK(mixed.ok);
  CHECK(mixed.left == Monomial{2, 2, 0});
  CHECK(mixed.right == Monomial{1, 0, 2});

  // empty faces: the empty product is 1 (x) 1
  const MixedLowerCheck trivial = verify_mixed_lower(tri, 0, 0);
  CHECK(trivial.ok);
  CHECK(trivial.element_nonzero);

  CHECK_THROWS_AS(verify_mixed_lower(tri, 0b111, 0), std::invalid_argument);
}

TEST_CASE("verification holds on every face pair of small fixtures") {
  const std::vector<std::pair<std::vector<int>, SimplicialComplex>> fixtures = {
      {{2, 2, 2}, SimplicialComplex::boundary_simplex(3)},
      {{4, 4, 4}, SimplicialComplex::boundary_simplex(3)},
      {{5, 3}, SimplicialComplex::points(2)},
      {{3, 1, 2}, SimplicialComplex::full_simplex(3)},
  };
  for (const auto& [dims, k] : fixtures) {
    const F2Context ctx(dims, k);
    for (FaceSet s1 : k.all_faces()) {
      for (FaceSet s2 : k.all_faces()) {
        CAPTURE(s1);
        CAPTURE(s2);
        CHECK(verify_mixed_lower(ctx, s1, s2).ok);
      }
    }
  }
}

TEST_CASE("cup-length search") {
  for (int n = 1; n <= 10; ++n) {
    const F2Context ctx({n}, SimplicialComplex::full_simplex(1));
    CHECK(zcl_search(ctx, 1000) == top_zero_divisor_power(n));
  }
  const F2Context two_points({1, 1}, SimplicialComplex::points(2));
  CHECK(zcl_search(two_points, 1000) == 2);
  const F2Context torus({1, 1}, SimplicialComplex::full_simplex(2));
  CHECK(zcl_search(torus, 1000) == 2);
  CHECK_THROWS_AS(zcl_search(F2Context({8, 8, 8, 8, 8},
                                       SimplicialComplex::full_simplex(5)),
                             100),
                  std::invalid_argument);
}
