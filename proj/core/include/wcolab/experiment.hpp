#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wcolab/chaos.hpp"
#include "wcolab/operator.hpp"
#include "wcolab/spaces.hpp"
#include "wcolab/symbols.hpp"

namespace wcolab {

inline constexpr int kSchemaVersion = 1;

/// One orbit starting vector as given on the command line or in a config.
struct CandidateSpec {
  enum class Kind { eigen, monomial, polynomial };
  Kind kind = Kind::eigen;
  Complex s{0.0};
  std::size_t monomial = 0;
  std::vector<Complex> coeffs;
};

/// Everything a run needs; round-trips through JSON.
struct ExperimentConfig {
  int schema_version = kSchemaVersion;
  std::string command;
  std::string preset;

  std::vector<Complex> weight{1.0};
  /// phi_a family when set, otherwise the polynomial symbol below.
  std::optional<double> phi_a = 0.5;
  std::vector<Complex> phi_poly;

  SpaceSpec space = SpaceSpec::hardy(2.0);
  std::size_t degree = 1024;
  std::size_t horizon = 500;
  std::optional<std::size_t> cap;
  double epsilon = 1e-10;
  double growth = 1e3;
  std::vector<CandidateSpec> candidates;

  /// eigen subcommand
  Complex eigen_s{1.0};

  std::vector<Complex> lambda_grid;
  std::vector<double> a_grid;
  std::vector<double> p_grid;
  std::vector<double> beta_grid;
  std::size_t threads = 0;

  std::string out;
  std::string format = "csv";
};

std::string config_to_json(const ExperimentConfig& cfg);
/// Throws std::invalid_argument on malformed input or a schema_version mismatch.
ExperimentConfig config_from_json(std::string_view text);

/// "0.5", "-0.4+0.1i", "2i", "1e-3-2e-2i".
Complex parse_complex(std::string_view text);
/// "0.9*z" (lambda z), "z", or a coefficient list "c0,c1,...".
std::vector<Complex> parse_weight(std::string_view text);
std::vector<Complex> parse_coefficients(std::string_view text);
/// Comma separated items: "s=-0.4", "s=0.25:k=2", "k=3", "poly=1|0|-1".
std::vector<CandidateSpec> parse_candidates(std::string_view text);
/// "h2", "h1", "hp" (with p), "bergman"/"a2" (with p, beta), "hinf".
SpaceSpec parse_space(std::string_view name, double p, double beta);
/// "lo:hi:count" (inclusive linspace), "x,y,z", or "" (empty grid).
std::vector<double> parse_grid(std::string_view text);
std::vector<Complex> parse_complex_grid(std::string_view text);

/// Validated symbol; throws std::invalid_argument naming the failed self-map test.
SelfMapSymbol build_symbol(const ExperimentConfig& cfg);
WeightedCompOp build_operator(const ExperimentConfig& cfg);
OrbitVector build_candidate(const CandidateSpec& c, std::size_t degree);

struct ClassifyResult {
  NormSequence weight_seq;
  std::vector<NormSequence> orbit_seqs;
  ChaosVerdict li_yorke;
  ChaosVerdict mean_li_yorke;
};

/// Weight-norm sequence plus one orbit per candidate, then both certificates.
/// In H^inf the weight norms use the upper bracket (decay) and the orbits the
/// lower bracket (growth).
ClassifyResult run_classify(const ExperimentConfig& cfg);
NormSequence run_weights(const ExperimentConfig& cfg);
NormSequence run_orbit(const ExperimentConfig& cfg);

struct SweepRow {
  Complex lambda;
  double a = 0.0;
  SpaceSpec space;
  ChaosVerdict li_yorke;
  ChaosVerdict mean_li_yorke;
};

/// Grid over (lambda, a) when lambda_grid/a_grid are given, otherwise over
/// (p, beta). Every cell is validated before any is evaluated; cells run on a
/// worker pool and are returned in grid order.
std::vector<SweepRow> run_sweep(const ExperimentConfig& cfg);

struct UnweightedPreset {
  double a = 0.5;
  /// decay[k][n-1] = ||C_{phi_a}^n ((1-z)^{1/4} z^k)||, k = 0, 1, 2.
  std::vector<NormSequence> decay;
  /// a^{n/4} 2^{1/4} (a^n + 1)^k
  std::vector<std::vector<double>> decay_bound;
  NormSequence growth;
  std::size_t fit_first = 0, fit_last = 0;
  double growth_rate = 0.0;
  NormSequence weight_seq;
};

/// Unweighted C_{phi_a}: decay of (1-z)^{1/4} z^k and growth of (1-z)^{-1/12}.
UnweightedPreset run_unweighted_preset(double a, const SpaceSpec& space, std::size_t horizon,
                                       std::size_t decay_degree, std::size_t growth_degree);

/// Config of the weighted chaotic example: w = 0.9 z, phi_{0.25}, s = -0.4.
ExperimentConfig weighted_chaotic_config();

void write_sequence_csv(std::ostream& out, const NormSequence& seq);
std::string verdict_to_json(const ChaosVerdict& v, const std::vector<NormSequence>& orbits);
std::string classify_to_json(const ClassifyResult& r, const ExperimentConfig& cfg);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string unweighted_to_json(const UnweightedPreset& p);
void write_unweighted_decay_csv(std::ostream& out, const UnweightedPreset& p);

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace wcolab
