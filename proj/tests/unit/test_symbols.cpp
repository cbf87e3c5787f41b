#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "test_support.hpp"
#include "wcolab/symbols.hpp"

using namespace wcolab;
using wcolab::testing::Gen;

namespace {
SelfMapSymbol validated(SelfMapSymbol phi) {
  REQUIRE(validate_self_map(phi));
  return phi;
}
}  // namespace

TEST_CASE("validate_self_map") {
  SelfMapSymbol half = SelfMapSymbol::phi_a(0.5);
  CHECK(validate_self_map(half));
  CHECK(half.validated());

  SelfMapSymbol twice = SelfMapSymbol::affine(2.0, 0.0);
  CHECK_FALSE(validate_self_map(twice));
  CHECK_FALSE(twice.validated());

  SelfMapSymbol rot = SelfMapSymbol::rotation(M_PI / 3);
  CHECK(validate_self_map(rot));

  SelfMapSymbol shifted = SelfMapSymbol::affine(0.0, 1.0);  // phi(0) on the circle
  CHECK_FALSE(validate_self_map(shifted));

  SelfMapSymbol bad_a = SelfMapSymbol::phi_a(1.2);
  CHECK_FALSE(validate_self_map(bad_a));

  SelfMapSymbol quad = SelfMapSymbol::polynomial(AnalyticPoly{0.0, 0.5, 0.5});
  CHECK(validate_self_map(quad));
  CHECK_FALSE(quad.is_affine());

  SelfMapSymbol small_grid = SelfMapSymbol::phi_a(0.5);
  CHECK_THROWS_AS(validate_self_map(small_grid, 16), std::invalid_argument);
}

TEST_CASE("polynomial symbols of degree one become affine") {
  const SelfMapSymbol phi = SelfMapSymbol::polynomial(AnalyticPoly{0.5, 0.5});
  CHECK(phi.is_affine());
  CHECK(phi.as_affine().alpha == Complex{0.5});
  CHECK(phi.as_affine().gamma == Complex{0.5});
}

TEST_CASE("phi_a family recognition") {
  CHECK(SelfMapSymbol::phi_a(0.25).is_phi_a_family());
  CHECK(SelfMapSymbol::phi_a(0.25).phi_a_parameter() == 0.25);
  CHECK_FALSE(SelfMapSymbol::rotation(1.0).is_phi_a_family());
  CHECK_FALSE(SelfMapSymbol::affine(0.5, 0.0).is_phi_a_family());
}

TEST_CASE("affine_iterate") {
  const SelfMapSymbol phi = validated(SelfMapSymbol::phi_a(0.5));
  const SelfMapSymbol p3 = affine_iterate(phi, 3);
  CHECK(p3.as_affine().alpha == Complex{0.125});
  CHECK(p3.as_affine().gamma == Complex{0.875});
  CHECK(p3.validated());

  const SelfMapSymbol p0 = affine_iterate(phi, 0);
  CHECK(p0.as_affine().alpha == Complex{1.0});
  CHECK(p0.as_affine().gamma == Complex{0.0});

  const SelfMapSymbol p1 = affine_iterate(phi, 1);
  CHECK(p1.as_affine().alpha == phi.as_affine().alpha);
  CHECK(p1.as_affine().gamma == phi.as_affine().gamma);

  // three hand compositions
  const SelfMapSymbol manual = compose_symbols(phi, compose_symbols(phi, phi));
  CHECK(manual.as_affine().alpha == Complex{0.125});
  CHECK(manual.as_affine().gamma == Complex{0.875});

  CHECK_THROWS_AS(affine_iterate(phi, -1), std::invalid_argument);
  CHECK_THROWS(affine_iterate(validated(SelfMapSymbol::polynomial(AnalyticPoly{0.0, 0.0, 1.0})), 2));
}

TEST_CASE("affine_iterate with alpha = 1 translates") {
  const SelfMapSymbol t = SelfMapSymbol::affine(1.0, Complex{0.0, 0.25});
  const SelfMapSymbol t4 = affine_iterate(t, 4);
  CHECK(t4.as_affine().alpha == Complex{1.0});
  CHECK(std::abs(t4.as_affine().gamma - Complex{0.0, 1.0}) < 1e-15);
}

TEST_CASE("compose_symbols with a cap is approximate") {
  const SelfMapSymbol q = validated(SelfMapSymbol::polynomial(AnalyticPoly{0.0, 0.5, 0.5}));
  const SelfMapSymbol qq = compose_symbols(q, q);
  CHECK_FALSE(qq.approximate());
  CHECK(qq.as_poly().trimmed_degree() == 4);
  const SelfMapSymbol qq3 = compose_symbols(q, q, 3);
  CHECK(qq3.approximate());
  CHECK(qq3.as_poly().degree() == 3);
}

TEST_CASE("validated symbols map interior points into the disk") {
  Gen gen(21);
  for (int i = 0; i < 20; ++i) {
    SelfMapSymbol phi = SelfMapSymbol::phi_a(gen.uniform(0.01, 1.0));
    REQUIRE(validate_self_map(phi));
    for (int j = 0; j < 64; ++j) CHECK(std::abs(phi(gen.disk(0.99))) < 1.0);
  }
}

TEST_CASE("WeightSymbol sup bracket") {
  const WeightSymbol w = WeightSymbol::linear(Complex{0.6, 0.0});
  CHECK(w.sup.lower == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(w.sup.upper == doctest::Approx(0.6).epsilon(1e-15));
  const WeightSymbol one = WeightSymbol::one();
  CHECK(one.sup.lower == 1.0);
  CHECK(one.sup.upper == 1.0);
  const WeightSymbol mixed(AnalyticPoly{0.5, Complex{0.0, 0.5}});
  CHECK(mixed.sup.lower <= mixed.sup.upper);
  CHECK(mixed.sup.upper == doctest::Approx(1.0));
}
