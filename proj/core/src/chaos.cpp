#include "wcolab/chaos.hpp"

#include <cmath>
#include <stdexcept>

#include "wcolab/symbols.hpp"
#include "wcolab/weight_iterates.hpp"

namespace wcolab {

SequenceStats sequence_stats(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("sequence statistics need at least one value");
  SequenceStats st;
  const std::size_t n = values.size();
  st.running_min.resize(n);
  st.running_max.resize(n);
  st.cesaro.resize(n);
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = values[i];
    sum += v;
    st.cesaro[i] = sum / static_cast<double>(i + 1);
    if (i == 0 || v < st.running_min[i - 1]) {
      st.running_min[i] = v;
      st.arg_min = i + 1;
    } else {
      st.running_min[i] = st.running_min[i - 1];
    }
    if (i == 0 || v > st.running_max[i - 1]) {
      st.running_max[i] = v;
      st.arg_max = i + 1;
    } else {
      st.running_max[i] = st.running_max[i - 1];
    }
  }
  return st;
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::li_yorke_evidence: return "LI_YORKE_EVIDENCE";
    case VerdictKind::mean_li_yorke_evidence: return "MEAN_LI_YORKE_EVIDENCE";
    case VerdictKind::no_evidence: return "NO_EVIDENCE";
    case VerdictKind::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(GrowthChannel c) {
  return c == GrowthChannel::weight_norm ? "weight-norm" : "orbit";
}

std::string to_string(SeriesKind s) { return s == SeriesKind::raw ? "raw" : "cesaro"; }

namespace {

void check_thresholds(double epsilon, double growth) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("decay threshold epsilon must be > 0");
  if (!(growth > 1.0)) throw std::invalid_argument("growth threshold G must be > 1");
}

void check_decay_source(const NormSequence& weight_seq) {
  if (weight_seq.values.empty()) throw std::invalid_argument("weight-norm sequence is empty");
  if (weight_seq.provenance == Provenance::bracket_lower)
    throw std::invalid_argument("a lower-bracket weight-norm sequence cannot support a decay claim");
}

std::optional<std::size_t> first_above(std::span<const double> v, double bound) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] > bound) return i + 1;
  return std::nullopt;
}

std::optional<double> tail_rate(std::span<const double> v) {
  const std::size_t last = v.size();
  const std::size_t first = last / 2 + 1;
  if (last < first || last - first + 1 < 8) return std::nullopt;
  for (std::size_t n = first; n <= last; ++n)
    if (!(v[n - 1] > 0.0)) return std::nullopt;
  return growth_rate_fit(v, first, last);
}

/// First crossing above G times the first value, over the weight channel and
/// then the orbits; among orbits the earliest crossing wins.
std::optional<GrowthWitness> find_growth(std::span<const double> weight,
                                         const std::vector<std::vector<double>>& orbits, double growth,
                                         SeriesKind series) {
  if (auto n = first_above(weight, growth * weight[0])) {
    GrowthWitness g;
    g.channel = GrowthChannel::weight_norm;
    g.n = *n;
    g.value = weight[*n - 1];
    g.baseline = weight[0];
    g.rate = tail_rate(weight);
    g.series = series;
    return g;
  }
  std::optional<GrowthWitness> best;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& v = orbits[i];
    if (v.empty() || !(v[0] > 0.0)) continue;
    auto n = first_above(v, growth * v[0]);
    if (!n || (best && best->n <= *n)) continue;
    GrowthWitness g;
    g.channel = GrowthChannel::orbit;
    g.orbit_index = i;
    g.n = *n;
    g.value = v[*n - 1];
    g.baseline = v[0];
    g.rate = tail_rate(v);
    g.series = series;
    best = g;
  }
  return best;
}

VerdictKind classify(bool decay, bool growth, VerdictKind evidence) {
  if (decay && growth) return evidence;
  if (!decay && !growth) return VerdictKind::no_evidence;
  return VerdictKind::inconclusive;
}

std::string branch_name(bool decay, bool growth) {
  if (decay && growth) return "decay and growth witnesses";
  if (decay) return "decay witness only";
  if (growth) return "growth witness only";
  return "no threshold crossing within horizon";
}

}  // namespace

ChaosVerdict certify_li_yorke(const NormSequence& weight_seq, std::span<const NormSequence> orbit_seqs,
                              double epsilon, double growth) {
  check_thresholds(epsilon, growth);
  check_decay_source(weight_seq);
  ChaosVerdict verdict;
  verdict.thresholds = {epsilon, growth, weight_seq.size()};
  verdict.decay_provenance = weight_seq.provenance;

  const auto& w = weight_seq.values;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < epsilon) {
      verdict.decay = DecayWitness{i + 1, w[i], SeriesKind::raw};
      break;
    }
  }
  std::vector<std::vector<double>> orbits;
  for (const auto& o : orbit_seqs) orbits.push_back(o.values);
  verdict.growth = find_growth(w, orbits, growth, SeriesKind::raw);

  verdict.kind = classify(verdict.decay.has_value(), verdict.growth.has_value(), VerdictKind::li_yorke_evidence);
  verdict.branch = branch_name(verdict.decay.has_value(), verdict.growth.has_value());
  if (verdict.kind == VerdictKind::li_yorke_evidence) {
    verdict.citation = verdict.growth->channel == GrowthChannel::weight_norm
                           ? "weight-norm criterion: ||w^(n)||_X -> 0 along a subsequence and "
                             "sup_n ||w^(n)||_X = inf give dense Li-Yorke chaos"
                           : "power-boundedness criterion: liminf ||w^(n)||_X = 0 and C_{w,phi} not "
                             "power bounded (||T^n|| >= ||T^n x|| / ||x||) give dense Li-Yorke chaos";
  } else {
    verdict.citation = "Li-Yorke criteria not met within horizon (" + verdict.branch + ")";
  }
  return verdict;
}

ChaosVerdict certify_mean_li_yorke(const NormSequence& weight_seq, std::span<const NormSequence> orbit_seqs,
                                   double epsilon, double growth) {
  check_thresholds(epsilon, growth);
  check_decay_source(weight_seq);
  ChaosVerdict verdict;
  verdict.thresholds = {epsilon, growth, weight_seq.size()};
  verdict.decay_provenance = weight_seq.provenance;

  const auto& w = weight_seq.values;
  // Start of the tail that stays below epsilon up to the horizon.
  std::size_t tail = w.size();
  while (tail > 0 && w[tail - 1] < epsilon) --tail;
  if (tail < w.size()) verdict.decay = DecayWitness{tail + 1, w[tail], SeriesKind::raw};

  const SequenceStats weight_stats = sequence_stats(w);
  std::vector<std::vector<double>> orbit_means;
  for (const auto& o : orbit_seqs) {
    if (o.values.empty()) {
      orbit_means.emplace_back();
      continue;
    }
    orbit_means.push_back(sequence_stats(o.values).cesaro);
  }
  verdict.growth = find_growth(weight_stats.cesaro, orbit_means, growth, SeriesKind::cesaro);

  verdict.kind =
      classify(verdict.decay.has_value(), verdict.growth.has_value(), VerdictKind::mean_li_yorke_evidence);
  verdict.branch = branch_name(verdict.decay.has_value(), verdict.growth.has_value());
  if (verdict.kind == VerdictKind::mean_li_yorke_evidence) {
    verdict.citation =
        verdict.growth->channel == GrowthChannel::weight_norm
            ? "Cesaro weight-norm criterion: (1/N) sum ||w^(j)||_X -> 0 along a subsequence and "
              "sup_N (1/N) sum ||w^(j)||_X = inf give dense mean Li-Yorke chaos"
            : "absolute Cesaro boundedness criterion: liminf (1/N) sum ||w^(j)||_X = 0 and "
              "limsup (1/N) sum ||T^j y||_X > 0 give dense mean Li-Yorke chaos";
  } else {
    verdict.citation = "mean Li-Yorke criteria not met within horizon (" + verdict.branch + ")";
  }
  return verdict;
}

IrregularWitness irregular_witness(std::span<const double> orbit, double epsilon, double growth) {
  check_thresholds(epsilon, growth);
  const SequenceStats st = sequence_stats(orbit);
  IrregularWitness w;
  w.arg_min = st.arg_min;
  w.arg_max = st.arg_max;
  w.irregular = st.min() < epsilon && st.max() > growth * orbit[0];
  return w;
}

double growth_rate_fit(std::span<const double> values, std::size_t first, std::size_t last) {
  if (first < 1 || last > values.size() || last < first)
    throw std::invalid_argument("fit window [" + std::to_string(first) + ", " + std::to_string(last) +
                                "] is outside the sequence of length " + std::to_string(values.size()));
  const std::size_t count = last - first + 1;
  if (count < 8) throw std::invalid_argument("fit window needs at least 8 points");
  double sx = 0, sy = 0;
  for (std::size_t n = first; n <= last; ++n) {
    const double v = values[n - 1];
    if (!(v > 0.0))
      throw std::invalid_argument("nonpositive value " + std::to_string(v) + " at n = " + std::to_string(n));
    sx += static_cast<double>(n);
    sy += std::log(v);
  }
  const double mx = sx / static_cast<double>(count);
  const double my = sy / static_cast<double>(count);
  double sxx = 0, sxy = 0;
  for (std::size_t n = first; n <= last; ++n) {
    const double dx = static_cast<double>(n) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(values[n - 1]) - my);
  }
  return sxy / sxx;
}

bool eigenfunction_in_space(Complex s, const SpaceSpec& spec) {
  switch (spec.kind) {
    case SpaceKind::hardy: return s.real() > -1.0 / spec.p;
    case SpaceKind::bergman: return s.real() > -(2.0 + spec.beta) / spec.p;
    case SpaceKind::sup: return s.real() >= 0.0;
  }
  return false;
}

double eigen_residual(double a, Complex s, const SpaceSpec& spec, std::size_t degree) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("eigen residual needs 0 < a < 1");
  if (!eigenfunction_in_space(s, spec))
    throw std::invalid_argument("(1-z)^s with Re s = " + std::to_string(s.real()) + " is not in " + spec.name());
  const AnalyticPoly g = binomial_series(s, degree);
  const Complex eigenvalue = std::exp(s * std::log(a));
  const AnalyticPoly residual = compose_affine(g, a, 1.0 - a) - g * eigenvalue;
  return norm(residual, spec).value / norm(g, spec).value;
}

}  // namespace wcolab
