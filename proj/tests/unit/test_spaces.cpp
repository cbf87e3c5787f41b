#include <doctest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "test_support.hpp"
#include "wcolab/series.hpp"
#include "wcolab/spaces.hpp"
#include "wcolab/symbols.hpp"

using namespace wcolab;
using wcolab::testing::Gen;
using wcolab::testing::rel_err;

TEST_CASE("coeff_norm_h2") {
  CHECK(coeff_norm_h2(AnalyticPoly{1.0, 1.0, 1.0}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(coeff_norm_h2(AnalyticPoly{1.0, -1.0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(coeff_norm_h2(binomial_series(0.5, 3)) == doctest::Approx(1.126735).epsilon(1e-6));
  CHECK(coeff_norm_h2(AnalyticPoly{}) == 0.0);
}

TEST_CASE("coeff_norm_bergman2") {
  for (double beta : {-0.5, 0.0, 1.0, 7.0}) CHECK(coeff_norm_bergman2(AnalyticPoly{1.0}, beta) == 1.0);
  CHECK(coeff_norm_bergman2(AnalyticPoly{0.0, 1.0}, 0.0) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(coeff_norm_bergman2(AnalyticPoly{0.0, 1.0}, 1.0) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(coeff_norm_bergman2(AnalyticPoly{1.0}, -1.0), std::invalid_argument);
}

TEST_CASE("Bergman weights agree with the gamma-ratio formula") {
  for (double beta : {-0.9, -0.5, 0.0, 1.0, 2.5, 10.0}) {
    const auto g = bergman_coefficient_weights(beta, 2000);
    REQUIRE(g.size() == 2001);
    for (std::size_t k = 0; k <= 2000; k += 37) CHECK(rel_err(g[k], testing::bergman_weight_gamma(k, beta)) < 1e-11);
  }
}

TEST_CASE("Gauss-Jacobi rule integrates the Bergman moments") {
  for (double beta : {-0.5, 0.0, 1.0, 2.5}) {
    const GaussJacobiRule rule = gauss_jacobi_unit(32, beta);
    CHECK(std::accumulate(rule.weights.begin(), rule.weights.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-13));
    const auto g = bergman_coefficient_weights(beta, 40);
    for (std::size_t k = 0; k <= 40; ++k) {
      double m = 0;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) m += rule.weights[i] * std::pow(rule.nodes[i], double(k));
      CHECK(rel_err(m, g[k]) < 1e-11);
    }
  }
}

TEST_CASE("quad_norm_hp") {
  for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) {
    CHECK(quad_norm_hp(AnalyticPoly{1.0}, p, 64) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quad_norm_hp(AnalyticPoly{0.0, 1.0}, p, 64) == doctest::Approx(1.0).epsilon(1e-14));
  }
  // ||1 + z||_4^4 = mean |1+z|^4 = 1 + 4 + 1 = 6
  CHECK(quad_norm_hp(AnalyticPoly{1.0, 1.0}, 4.0, 64) == doctest::Approx(std::pow(6.0, 0.25)).epsilon(1e-14));
  CHECK_THROWS_AS(quad_norm_hp(AnalyticPoly{1.0}, 0.5, 64), std::invalid_argument);
  CHECK_THROWS_AS(quad_norm_hp(AnalyticPoly(std::vector<Complex>(40, 1.0)), 2.0, 64), std::invalid_argument);

  Gen gen(41);
  for (int i = 0; i < 20; ++i) {
    std::vector<Complex> c(65);
    for (auto& x : c) x = gen.box();
    const AnalyticPoly f(std::move(c));
    CHECK(rel_err(quad_norm_hp(f, 2.0, 4 * 64 + 1), coeff_norm_h2(f)) < 1e-10);
  }
}

TEST_CASE("quad_norm_bergman_p") {
  for (double p : {1.5, 2.0, 3.0})
    for (double beta : {-0.5, 0.0, 2.0})
      CHECK(quad_norm_bergman_p(AnalyticPoly{1.0}, p, beta, 32, 64) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(quad_norm_bergman_p(AnalyticPoly{0.0, 1.0}, 2.0, 0.0, 128, 64) ==
        doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-8));
  Gen gen(43);
  for (double beta : {-0.5, 1.0, 2.5}) {
    for (int i = 0; i < 5; ++i) {
      std::vector<Complex> c(33);
      for (auto& x : c) x = gen.box();
      const AnalyticPoly f(std::move(c));
      CHECK(rel_err(quad_norm_bergman_p(f, 2.0, beta, 128, 256), coeff_norm_bergman2(f, beta)) < 1e-8);
    }
  }
}

TEST_CASE("sup_norm_bracket") {
  const SupBracket z = sup_norm_bracket(AnalyticPoly{0.0, 1.0});
  CHECK(z.lower == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(z.upper == 1.0);
  const AnalyticPoly half{0.5, 0.5};
  double prev = 0;
  for (std::size_t m : {64, 128, 256, 1024}) {
    const SupBracket b = sup_norm_bracket(half, m);
    CHECK(b.lower >= prev);
    CHECK(b.lower <= b.upper);
    CHECK(b.upper == 1.0);
    prev = b.lower;
  }
  CHECK(prev == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(sup_norm_bracket(half, 8), std::invalid_argument);
}

TEST_CASE("auto_grid") {
  CHECK(auto_grid(0) == 64);
  CHECK(auto_grid(16) == 128);
  CHECK(auto_grid(64) == 512);
  CHECK(auto_grid(64, 5.0) == 512);
  CHECK(auto_grid(64, 9.0) == 1024);
}

TEST_CASE("SpaceSpec validation and dispatch") {
  CHECK_THROWS_AS(SpaceSpec::hardy(0.5), std::invalid_argument);
  CHECK_THROWS_AS(SpaceSpec::bergman(2.0, -1.0), std::invalid_argument);
  CHECK(SpaceSpec::hardy(2).is_hilbert());
  CHECK_FALSE(SpaceSpec::hardy(3).is_hilbert());
  CHECK_FALSE(SpaceSpec::sup().is_hilbert());
  CHECK(SpaceSpec::hardy(2).name() == "H^2");

  const AnalyticPoly f{1.0, 2.0, -1.0};
  CHECK(norm(f, SpaceSpec::hardy(2)).provenance == Provenance::exact_coefficient);
  CHECK(norm(f, SpaceSpec::bergman(2, 0.5)).provenance == Provenance::exact_coefficient);
  const NormValue h3 = norm(f, SpaceSpec::hardy(3));
  CHECK(h3.provenance == Provenance::quadrature);
  CHECK(h3.converged);
  CHECK(norm(f, SpaceSpec::sup(SupSide::lower)).provenance == Provenance::bracket_lower);
  CHECK(norm(f, SpaceSpec::sup(SupSide::upper)).provenance == Provenance::bracket_upper);
  CHECK(norm(f, SpaceSpec::sup(SupSide::upper)).value == 4.0);

  for (auto p : {Provenance::exact_coefficient, Provenance::quadrature, Provenance::bracket_lower,
                 Provenance::bracket_upper})
    CHECK(provenance_from_string(to_string(p)) == p);
}

TEST_CASE("odd p converges by grid doubling") {
  Gen gen(45);
  const AnalyticPoly f = gen.poly(20);
  const NormValue v = norm(f, SpaceSpec::hardy(1.0));
  CHECK(v.converged);
  CHECK(rel_err(v.value, quad_norm_hp(f, 1.0, 1 << 14)) < 1e-8);
}
