#include <doctest.h>

#include "test_support.hpp"
#include "wcolab/series.hpp"

using namespace wcolab;
using wcolab::testing::Gen;

TEST_CASE("poly_arith: products and identities") {
  const AnalyticPoly one_plus_z{1.0, 1.0}, one_minus_z{1.0, -1.0};
  CHECK(one_plus_z * one_minus_z == AnalyticPoly{1.0, 0.0, -1.0});
  CHECK(poly_arith(AnalyticPoly{1.0, 2.0}, AnalyticPoly{3.0, 4.0}, ArithKind::mul) == AnalyticPoly{3.0, 10.0, 8.0});
  CHECK(poly_arith(AnalyticPoly{1.0, 2.0}, AnalyticPoly{0.0, 0.0, 5.0}, ArithKind::add) == AnalyticPoly{1.0, 2.0, 5.0});
  CHECK(poly_arith(AnalyticPoly{1.0, 2.0}, AnalyticPoly{}, ArithKind::scale, Complex{0.0, 1.0}) ==
        AnalyticPoly{Complex{0, 1}, Complex{0, 2}});

  Gen gen(11);
  for (int i = 0; i < 20; ++i) {
    const AnalyticPoly f = gen.poly(20);
    CHECK(f * AnalyticPoly{1.0} == f);
  }
}

TEST_CASE("AnalyticPoly: zero function and trailing zeros") {
  const AnalyticPoly zero;
  CHECK(zero.degree() == 0);
  CHECK(zero[0] == Complex{0.0});
  CHECK(AnalyticPoly(std::vector<Complex>{}) == zero);
  CHECK(AnalyticPoly{1.0, 2.0, 0.0, 0.0} == AnalyticPoly{1.0, 2.0});
  CHECK(AnalyticPoly{1.0, 2.0, 0.0, 0.0}.trimmed_degree() == 1);
  CHECK_FALSE(AnalyticPoly{1.0, 2.0} == AnalyticPoly{1.0, 2.0, 1e-300});
}

TEST_CASE("mul_truncated keeps the exact low coefficients") {
  Gen gen(5);
  for (int i = 0; i < 10; ++i) {
    const AnalyticPoly f = gen.poly(30), g = gen.poly(30);
    const AnalyticPoly full = f * g;
    const std::size_t cap = gen.index(0, 40);
    const AnalyticPoly t = mul_truncated(f, g, cap);
    CHECK(t.degree() == std::min(cap, full.degree()));
    for (std::size_t k = 0; k <= t.degree(); ++k) CHECK(t[k] == full[k]);
  }
}

TEST_CASE("compose_affine") {
  CHECK(compose_affine(AnalyticPoly{0.0, 0.0, 1.0}, 0.5, 0.5) == AnalyticPoly{0.25, 0.5, 0.25});
  CHECK(compose_affine(AnalyticPoly{1.0}, Complex{0.3, 2.0}, Complex{-7.0, 1.0}) == AnalyticPoly{1.0});
  // (1-z)^2 o phi_{1/2} = (1/4)(1-z)^2
  CHECK(compose_affine(AnalyticPoly{1.0, -2.0, 1.0}, 0.5, 0.5) == AnalyticPoly{0.25, -0.5, 0.25});

  SUBCASE("matches the binomial expansion oracle") {
    Gen gen(7);
    for (int i = 0; i < 20; ++i) {
      const AnalyticPoly f = gen.poly(24);
      const Complex alpha = gen.disk(), gamma = gen.disk();
      const AnalyticPoly fast = compose_affine(f, alpha, gamma);
      const AnalyticPoly oracle = testing::compose_affine_binomial(f, alpha, gamma);
      CHECK(max_coeff_distance(fast, oracle) < 1e-12);
    }
  }
  SUBCASE("identity map is exact") {
    Gen gen(8);
    for (int i = 0; i < 10; ++i) {
      const AnalyticPoly f = gen.poly(40);
      CHECK(compose_affine(f, 1.0, 0.0) == f);
    }
  }
}

TEST_CASE("compose with a polynomial inner function") {
  const AnalyticPoly f{1.0, 1.0, 1.0};  // 1 + z + z^2
  const AnalyticPoly g{0.0, 0.0, 0.5};  // z^2 / 2
  CHECK(compose(f, g) == AnalyticPoly{1.0, 0.0, 0.5, 0.0, 0.25});
  const AnalyticPoly capped = compose(f, g, 2);
  CHECK(capped == AnalyticPoly{1.0, 0.0, 0.5});
}

TEST_CASE("binomial_series") {
  CHECK(binomial_series(1.0, 1) == AnalyticPoly{1.0, -1.0});
  CHECK(binomial_series(2.0, 2) == AnalyticPoly{1.0, -2.0, 1.0});
  // d2 = (-0.5)(1-0.5)/2, d3 = d2 (2-0.5)/3
  const AnalyticPoly half = binomial_series(0.5, 3);
  CHECK(half[0] == Complex{1.0});
  CHECK(half[1] == Complex{-0.5});
  CHECK(half[2] == Complex{-0.125});
  CHECK(half[3] == Complex{-0.0625});
  // integer exponent terminates
  const AnalyticPoly cube = binomial_series(3.0, 10);
  CHECK(cube.trimmed_degree() == 3);
  CHECK(cube == AnalyticPoly{1.0, -3.0, 3.0, -1.0});
}

TEST_CASE("eval_point") {
  CHECK(eval_point(AnalyticPoly{1.0, -1.0}, 0.5) == Complex{0.5});
  CHECK(eval_point(AnalyticPoly{0.0, 0.0, 1.0}, Complex{0.0, 1.0}) == Complex{-1.0});
}
