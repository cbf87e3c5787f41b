#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "wcolab/series.hpp"
#include "wcolab/spaces.hpp"
#include "wcolab/symbols.hpp"
#include "wcolab/weight_iterates.hpp"

namespace wcolab {

/// C_{w,phi} f = w * (f o phi).
struct WeightedCompOp {
  WeightSymbol w;
  SelfMapSymbol phi;

  /// Throws std::invalid_argument if phi is not validated.
  WeightedCompOp(WeightSymbol weight, SelfMapSymbol symbol);
};

/// One application w * (f o phi).
AnalyticPoly apply(const WeightedCompOp& op, const AnalyticPoly& f);

/// (C_{w,phi})^n f = w^(n) * (f o phi^n), one composition and one product.
AnalyticPoly apply_n(const WeightedCompOp& op, const AnalyticPoly& f, std::size_t n,
                     const WeightIterateCache& cache);

/// The H^2 function (1 - z)^s z^k, which is not a polynomial. Stored through its
/// Maclaurin coefficients up to `degree`; orbits under phi_a-family symbols use
/// C_{phi_a^n} (1-z)^s = a^{ns} (1-z)^s, so the truncated orbit coefficients are
/// exact partial sums of the true ones.
struct EigenCandidate {
  Complex s;
  std::size_t degree = 1024;
  std::size_t monomial = 0;
};

using OrbitVector = std::variant<AnalyticPoly, EigenCandidate>;

std::string describe(const OrbitVector& v);

/// Coefficients 0..degree of (C_{w,phi})^n applied to an eigen candidate.
/// Requires a phi_a-family symbol.
AnalyticPoly apply_n_eigen(const WeightedCompOp& op, const EigenCandidate& g, std::size_t n,
                           const WeightIterateCache& cache);

/// v_1..v_T with how each value bounds the true norm.
struct NormSequence {
  std::vector<double> values;
  SpaceSpec space;
  Provenance provenance = Provenance::exact_coefficient;
  /// False if any quadrature value failed its grid-doubling check.
  bool converged = true;
  std::string label;

  std::size_t size() const { return values.size(); }
  /// 1-based.
  double at(std::size_t n) const { return values.at(n - 1); }
};

/// ||T^n x||, n = 1..cache.horizon().
NormSequence orbit_norm_sequence(const WeightedCompOp& op, const OrbitVector& x, const SpaceSpec& spec,
                                 const WeightIterateCache& cache);
NormSequence orbit_norm_sequence(const WeightedCompOp& op, const OrbitVector& x, const SpaceSpec& spec,
                                 std::size_t horizon);

/// ||w^(n)||_X = ||T^n 1||_X, n = 1..horizon.
NormSequence weight_norm_sequence(const WeightIterateCache& cache, const SpaceSpec& spec);

}  // namespace wcolab
