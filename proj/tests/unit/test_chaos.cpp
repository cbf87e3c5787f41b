#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_support.hpp"
#include "wcolab/chaos.hpp"

using namespace wcolab;

namespace {
NormSequence seq(std::vector<double> v, Provenance prov = Provenance::exact_coefficient) {
  NormSequence s;
  s.values = std::move(v);
  s.space = SpaceSpec::hardy(2);
  s.provenance = prov;
  return s;
}

std::vector<double> generate(std::size_t n, auto f) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = f(static_cast<double>(i + 1));
  return v;
}

struct Run {
  NormSequence weights;
  std::vector<NormSequence> orbits;
};

Run preset_run(double lambda, double a, double s, std::size_t degree, std::size_t horizon, const SpaceSpec& spec) {
  SelfMapSymbol phi = SelfMapSymbol::phi_a(a);
  REQUIRE(validate_self_map(phi));
  const WeightedCompOp op(WeightSymbol::linear(lambda), phi);
  const WeightIterateCache cache(op.w, op.phi, horizon);
  Run r{weight_norm_sequence(cache, spec), {}};
  r.orbits.push_back(orbit_norm_sequence(op, EigenCandidate{s, degree, 0}, spec, cache));
  return r;
}
}  // namespace

TEST_CASE("sequence_stats") {
  const auto c = sequence_stats(std::vector<double>(10, 3.0));
  CHECK(c.min() == 3.0);
  CHECK(c.max() == 3.0);
  for (double a : c.cesaro) CHECK(a == 3.0);

  const auto lin = sequence_stats(generate(50, [](double n) { return n; }));
  for (std::size_t N = 1; N <= 50; ++N) CHECK(lin.cesaro[N - 1] == doctest::Approx((N + 1) / 2.0));
  CHECK(lin.arg_min == 1);
  CHECK(lin.arg_max == 50);

  const auto geo = sequence_stats(generate(40, [](double n) { return std::pow(0.5, n); }));
  for (std::size_t N = 1; N <= 40; ++N)
    CHECK(geo.cesaro[N - 1] == doctest::Approx((1 - std::pow(0.5, double(N))) / N).epsilon(1e-14));
  CHECK(geo.arg_min == 40);
}

TEST_CASE("irregular_witness") {
  CHECK_FALSE(irregular_witness(std::vector<double>(20, 1.0), 1e-10, 1e3).irregular);
  std::vector<double> v(100, 1.0);
  v[9] = 1e-12;
  v[89] = 1e6;
  const IrregularWitness w = irregular_witness(v, 1e-10, 1e3);
  CHECK(w.irregular);
  CHECK(w.arg_min == 10);
  CHECK(w.arg_max == 90);
  CHECK_FALSE(irregular_witness(generate(100, [](double n) { return std::pow(0.5, n); }), 1e-10, 1e3).irregular);
}

TEST_CASE("growth_rate_fit") {
  const auto pow2 = generate(40, [](double n) { return std::pow(2.0, n); });
  CHECK(std::abs(growth_rate_fit(pow2, 1, 40) - std::log(2.0)) < 1e-12);
  CHECK(std::abs(growth_rate_fit(std::vector<double>(20, 5.0), 3, 20)) < 1e-15);
  CHECK_THROWS_AS(growth_rate_fit(pow2, 1, 5), std::invalid_argument);
  auto bad = pow2;
  bad[10] = 0.0;
  CHECK_THROWS_AS(growth_rate_fit(bad, 1, 40), std::invalid_argument);
  CHECK_THROWS(growth_rate_fit(pow2, 30, 41));
}

TEST_CASE("certify_li_yorke on synthetic sequences") {
  const NormSequence flat = seq(std::vector<double>(100, 1.0));
  const std::vector<NormSequence> none;
  CHECK(certify_li_yorke(flat, none, 1e-10, 1e3).kind == VerdictKind::no_evidence);

  const NormSequence decaying = seq(generate(100, [](double n) { return std::pow(0.5, n); }));
  const ChaosVerdict d = certify_li_yorke(decaying, none, 1e-10, 1e3);
  CHECK(d.kind == VerdictKind::inconclusive);
  REQUIRE(d.decay);
  CHECK(d.decay->n == 34);  // 0.5^34 < 1e-10 < 0.5^33
  CHECK_FALSE(d.growth);

  const std::vector<NormSequence> growing{seq(generate(100, [](double n) { return std::exp(0.2 * n); }))};
  const ChaosVerdict both = certify_li_yorke(decaying, growing, 1e-10, 1e3);
  CHECK(both.kind == VerdictKind::li_yorke_evidence);
  REQUIRE(both.growth);
  CHECK(both.growth->channel == GrowthChannel::orbit);
  CHECK(both.growth->value > 1e3 * both.growth->baseline);
  CHECK(both.thresholds.horizon == 100);

  CHECK_THROWS_AS(certify_li_yorke(seq({1.0}, Provenance::bracket_lower), none, 1e-10, 1e3), std::invalid_argument);
  CHECK_THROWS_AS(certify_li_yorke(flat, none, 0.0, 1e3), std::invalid_argument);
  CHECK_THROWS_AS(certify_li_yorke(flat, none, 1e-10, 1.0), std::invalid_argument);
}

TEST_CASE("certify_mean_li_yorke on synthetic sequences") {
  const std::vector<NormSequence> lin{seq(generate(100, [](double n) { return n; }))};
  const NormSequence flat = seq(std::vector<double>(100, 1.0));
  const ChaosVerdict v = certify_mean_li_yorke(flat, lin, 1e-10, 10.0);
  REQUIRE(v.growth);
  CHECK(v.growth->series == SeriesKind::cesaro);
  CHECK(v.growth->n == 20);  // A_20 = 10.5 > 10
  CHECK(v.kind == VerdictKind::inconclusive);
  CHECK(certify_mean_li_yorke(flat, {}, 1e-10, 1e3).kind == VerdictKind::no_evidence);
}

TEST_CASE("weighted preset classifications") {
  const Run run = preset_run(0.9, 0.25, -0.4, 1024, 500, SpaceSpec::hardy(2));
  const ChaosVerdict ly = certify_li_yorke(run.weights, run.orbits, 1e-10, 1e3);
  CHECK(ly.kind == VerdictKind::li_yorke_evidence);
  const ChaosVerdict mly = certify_mean_li_yorke(run.weights, run.orbits, 1e-10, 1e3);
  CHECK(mly.kind == VerdictKind::mean_li_yorke_evidence);
  const double rate = growth_rate_fit(run.orbits[0].values, 300, 500);
  CHECK(testing::rel_err(rate, std::log(0.9 * std::pow(0.25, -0.4))) < 0.2);

  SUBCASE("witness reproducibility") {
    REQUIRE(ly.decay);
    REQUIRE(ly.growth);
    CHECK(run.weights.at(ly.decay->n) == ly.decay->value);
    const NormSequence& gseq =
        ly.growth->channel == GrowthChannel::orbit ? run.orbits[ly.growth->orbit_index] : run.weights;
    CHECK(gseq.at(ly.growth->n) == ly.growth->value);
    const auto stats = sequence_stats(gseq);
    REQUIRE(mly.growth);
    const NormSequence& mseq =
        mly.growth->channel == GrowthChannel::orbit ? run.orbits[mly.growth->orbit_index] : run.weights;
    CHECK(sequence_stats(mseq).cesaro[mly.growth->n - 1] == mly.growth->value);
    CHECK(stats.max() >= ly.growth->value);
  }
}

TEST_CASE("control below the hypothesis region is inconclusive") {
  const Run run = preset_run(0.6, 0.5, -0.4, 1024, 500, SpaceSpec::hardy(2));
  const ChaosVerdict v = certify_li_yorke(run.weights, run.orbits, 1e-10, 1e3);
  CHECK(v.kind == VerdictKind::inconclusive);
  CHECK(v.decay);
  CHECK_FALSE(v.growth);
}

TEST_CASE("eigen_residual") {
  CHECK(eigen_residual(0.5, 1.0, SpaceSpec::hardy(2), 1) <= 1e-14);
  CHECK(eigen_residual(0.5, 1.0, SpaceSpec::hardy(2), 10) <= 1e-14);
  CHECK(eigen_residual(0.5, 2.0, SpaceSpec::hardy(2), 8) <= 1e-12);
  for (double a : {0.25, 0.5, 0.75})
    for (int s = 1; s <= 4; ++s)
      for (const SpaceSpec& sp : {SpaceSpec::hardy(2), SpaceSpec::bergman(2, 1.0)})
        CHECK(eigen_residual(a, double(s), sp, std::size_t(s) + 3) <= 1e-12);
  CHECK(eigen_residual(0.25, -0.4, SpaceSpec::hardy(2), 4096) < eigen_residual(0.25, -0.4, SpaceSpec::hardy(2), 1024));
  CHECK_THROWS_AS(eigen_residual(0.5, -0.6, SpaceSpec::hardy(2), 64), std::invalid_argument);
  CHECK_THROWS_AS(eigen_residual(1.5, 1.0, SpaceSpec::hardy(2), 64), std::invalid_argument);
}

TEST_CASE("eigenfunction membership") {
  CHECK(eigenfunction_in_space(-0.4, SpaceSpec::hardy(2)));
  CHECK_FALSE(eigenfunction_in_space(-0.5, SpaceSpec::hardy(2)));
  CHECK(eigenfunction_in_space(-0.9, SpaceSpec::hardy(1)));
  CHECK(eigenfunction_in_space(-0.9, SpaceSpec::bergman(2, 0.0)));
  CHECK_FALSE(eigenfunction_in_space(-1.0, SpaceSpec::bergman(2, 0.0)));
  CHECK(eigenfunction_in_space(0.0, SpaceSpec::sup()));
  CHECK_FALSE(eigenfunction_in_space(-0.1, SpaceSpec::sup()));
  for (auto k : {VerdictKind::li_yorke_evidence, VerdictKind::mean_li_yorke_evidence, VerdictKind::no_evidence,
                 VerdictKind::inconclusive}) {
    const std::string s = to_string(k);
    CHECK((s.ends_with("EVIDENCE") || s == "INCONCLUSIVE"));
  }
}
