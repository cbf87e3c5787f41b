#include "wcolab/operator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wcolab {

WeightedCompOp::WeightedCompOp(WeightSymbol weight, SelfMapSymbol symbol)
    : w(std::move(weight)), phi(std::move(symbol)) {
  if (!phi.validated()) throw std::invalid_argument("self-map symbol has not been validated");
}

AnalyticPoly apply(const WeightedCompOp& op, const AnalyticPoly& f) {
  return op.w.poly * compose_with(f, op.phi);
}

AnalyticPoly apply_n(const WeightedCompOp& op, const AnalyticPoly& f, std::size_t n,
                     const WeightIterateCache& cache) {
  (void)op;
  if (n == 0) return f;
  if (n > cache.horizon())
    throw std::invalid_argument("power " + std::to_string(n) + " exceeds cache horizon " +
                                std::to_string(cache.horizon()));
  const AnalyticPoly composed = compose_with(f, cache.symbol_iterate(n), cache.cap());
  if (cache.cap()) return mul_truncated(cache.weight_iterate(n), composed, *cache.cap());
  return cache.weight_iterate(n) * composed;
}

std::string describe(const OrbitVector& v) {
  std::ostringstream out;
  if (const auto* g = std::get_if<EigenCandidate>(&v)) {
    out << "(1-z)^(" << g->s.real();
    if (g->s.imag() != 0.0) out << (g->s.imag() < 0 ? "" : "+") << g->s.imag() << "i";
    out << ")";
    if (g->monomial > 0) out << "*z^" << g->monomial;
    out << " [D=" << g->degree << "]";
  } else {
    out << "poly[deg=" << std::get<AnalyticPoly>(v).trimmed_degree() << "]";
  }
  return out.str();
}

AnalyticPoly apply_n_eigen(const WeightedCompOp& op, const EigenCandidate& g, std::size_t n,
                           const WeightIterateCache& cache) {
  if (!op.phi.is_phi_a_family())
    throw std::invalid_argument("eigenfunction candidates need a symbol of the form a z + 1 - a");
  const AnalyticPoly base = binomial_series(g.s, g.degree);
  if (n == 0) return mul_truncated(base, AnalyticPoly::monomial(g.monomial), g.degree);
  if (n > cache.horizon())
    throw std::invalid_argument("power " + std::to_string(n) + " exceeds cache horizon " +
                                std::to_string(cache.horizon()));
  const double a = op.phi.phi_a_parameter();
  // a^{ns} = exp(n s log a), real logarithm
  const Complex eigenvalue = std::exp(static_cast<double>(n) * g.s * std::log(a));
  AnalyticPoly factor = cache.weight_iterate(n);
  if (g.monomial > 0)
    factor = mul_truncated(factor, compose_with(AnalyticPoly::monomial(g.monomial), cache.symbol_iterate(n)),
                           g.degree);
  return mul_truncated(factor, base, g.degree) * eigenvalue;
}

namespace {

NormSequence make_sequence(const SpaceSpec& spec, std::string label, std::size_t horizon) {
  NormSequence seq;
  seq.space = spec;
  seq.label = std::move(label);
  seq.values.reserve(horizon);
  return seq;
}

}  // namespace

NormSequence orbit_norm_sequence(const WeightedCompOp& op, const OrbitVector& x, const SpaceSpec& spec,
                                 const WeightIterateCache& cache) {
  const std::size_t horizon = cache.horizon();
  NormSequence seq = make_sequence(spec, describe(x), horizon);
  const bool eigen = std::holds_alternative<EigenCandidate>(x);
  if (eigen && !op.phi.is_phi_a_family())
    throw std::invalid_argument("eigenfunction candidates need a symbol of the form a z + 1 - a");

  Provenance tag = Provenance::exact_coefficient;
  for (std::size_t n = 1; n <= horizon; ++n) {
    const AnalyticPoly image = eigen ? apply_n_eigen(op, std::get<EigenCandidate>(x), n, cache)
                                     : apply_n(op, std::get<AnalyticPoly>(x), n, cache);
    const NormValue v = norm(image, spec);
    seq.values.push_back(v.value);
    seq.converged = seq.converged && v.converged;
    tag = v.provenance;
  }
  // Truncated coefficient norms are partial sums of the true ones.
  if (tag == Provenance::exact_coefficient && (eigen || cache.truncated())) tag = Provenance::bracket_lower;
  if (eigen && spec.kind == SpaceKind::sup) tag = Provenance::quadrature;
  seq.provenance = tag;
  return seq;
}

NormSequence orbit_norm_sequence(const WeightedCompOp& op, const OrbitVector& x, const SpaceSpec& spec,
                                 std::size_t horizon) {
  const WeightIterateCache cache(op.w, op.phi, horizon);
  return orbit_norm_sequence(op, x, spec, cache);
}

NormSequence weight_norm_sequence(const WeightIterateCache& cache, const SpaceSpec& spec) {
  NormSequence seq = make_sequence(spec, "w^(n)", cache.horizon());
  Provenance tag = Provenance::exact_coefficient;
  for (std::size_t n = 1; n <= cache.horizon(); ++n) {
    const NormValue v = norm(cache.weight_iterate(n), spec);
    seq.values.push_back(v.value);
    seq.converged = seq.converged && v.converged;
    tag = v.provenance;
  }
  if (cache.truncated()) {
    if (tag == Provenance::exact_coefficient) tag = Provenance::bracket_lower;
    if (tag == Provenance::bracket_upper) tag = Provenance::quadrature;
  }
  seq.provenance = tag;
  return seq;
}

}  // namespace wcolab
