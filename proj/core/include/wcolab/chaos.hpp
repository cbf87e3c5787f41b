#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wcolab/operator.hpp"
#include "wcolab/spaces.hpp"

namespace wcolab {

/// Prefix statistics of v_1..v_T; element i of each vector describes the
/// prefix of length i + 1. Indices are 1-based.
struct SequenceStats {
  std::vector<double> running_min;
  std::vector<double> running_max;
  /// A_N = (1/N) sum_{j <= N} v_j
  std::vector<double> cesaro;
  std::size_t arg_min = 1;
  std::size_t arg_max = 1;

  double min() const { return running_min.back(); }
  double max() const { return running_max.back(); }
};

SequenceStats sequence_stats(std::span<const double> values);
inline SequenceStats sequence_stats(const NormSequence& seq) { return sequence_stats(seq.values); }

enum class VerdictKind { li_yorke_evidence, mean_li_yorke_evidence, no_evidence, inconclusive };
enum class GrowthChannel { weight_norm, orbit };
/// Which stored series a witness indexes: the norms themselves or their Cesàro means.
enum class SeriesKind { raw, cesaro };

std::string to_string(VerdictKind k);
std::string to_string(GrowthChannel c);
std::string to_string(SeriesKind s);

struct DecayWitness {
  std::size_t n = 0;
  double value = 0.0;
  SeriesKind series = SeriesKind::raw;
};

struct GrowthWitness {
  GrowthChannel channel = GrowthChannel::weight_norm;
  /// Position in the orbit list (orbit channel only).
  std::size_t orbit_index = 0;
  std::size_t n = 0;
  double value = 0.0;
  /// The first value of the series; growth means value > G * baseline.
  double baseline = 0.0;
  /// Log-slope over the second half of the series, when it can be fitted.
  std::optional<double> rate;
  SeriesKind series = SeriesKind::raw;
};

struct Thresholds {
  double epsilon = 1e-10;
  double growth = 1e3;
  std::size_t horizon = 0;
};

/// Finite-horizon certificate. It records threshold crossings only; it never
/// claims a liminf or limsup.
struct ChaosVerdict {
  VerdictKind kind = VerdictKind::inconclusive;
  std::optional<DecayWitness> decay;
  std::optional<GrowthWitness> growth;
  Thresholds thresholds;
  std::string citation;
  /// Which decision branch fired.
  std::string branch;
  Provenance decay_provenance = Provenance::exact_coefficient;
};

/// Decay: min of the weight-norm sequence below epsilon. Growth: the weight
/// norms, or some orbit, exceed G times their first value. Throws if the
/// weight sequence is a lower bracket (unsound for decay) or thresholds are
/// out of range.
ChaosVerdict certify_li_yorke(const NormSequence& weight_seq, std::span<const NormSequence> orbit_seqs,
                              double epsilon, double growth);

/// Decay: the weight norms drop below epsilon and stay there up to the
/// horizon, so their Cesàro means tend to zero. Growth: the Cesàro means of
/// the weight norms or of some orbit exceed G times A_1.
ChaosVerdict certify_mean_li_yorke(const NormSequence& weight_seq, std::span<const NormSequence> orbit_seqs,
                                   double epsilon, double growth);

struct IrregularWitness {
  bool irregular = false;
  std::size_t arg_min = 1;
  std::size_t arg_max = 1;
};

/// min < epsilon and max > G v_1.
IrregularWitness irregular_witness(std::span<const double> orbit, double epsilon, double growth);
inline IrregularWitness irregular_witness(const NormSequence& orbit, double epsilon, double growth) {
  return irregular_witness(orbit.values, epsilon, growth);
}

/// Least-squares slope of log v_n against n for n in [first, last] (1-based,
/// inclusive, at least 8 points, all values positive).
double growth_rate_fit(std::span<const double> values, std::size_t first, std::size_t last);

/// ||C_{phi_a} g - a^s g|| / ||g|| for g = binomial_series(s, degree).
double eigen_residual(double a, Complex s, const SpaceSpec& spec, std::size_t degree);

/// Whether (1 - z)^s lies in the space (Re s > -1/p for H^p, > -(2+beta)/p for A^p_beta, >= 0 for H^inf).
bool eigenfunction_in_space(Complex s, const SpaceSpec& spec);

}  // namespace wcolab
