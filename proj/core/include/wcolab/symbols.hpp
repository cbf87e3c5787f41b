#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "wcolab/series.hpp"

namespace wcolab {

/// phi(z) = alpha z + gamma. `fixes_one` marks the family alpha z + 1 - alpha,
/// whose iterates keep the exact form alpha^n z + 1 - alpha^n.
struct AffineMap {
  Complex alpha;
  Complex gamma;
  bool fixes_one = false;
};

struct PolynomialMap {
  AnalyticPoly poly;
};

/// Analytic self-map of the disk. Operators refuse symbols that have not passed
/// validate_self_map.
class SelfMapSymbol {
public:
  /// The family a z + 1 - a.
  static SelfMapSymbol phi_a(double a);
  static SelfMapSymbol affine(Complex alpha, Complex gamma);
  static SelfMapSymbol identity() { return affine(1.0, 0.0); }
  static SelfMapSymbol rotation(double theta);
  /// Polynomials of degree <= 1 are stored as affine maps.
  static SelfMapSymbol polynomial(AnalyticPoly poly);

  bool is_affine() const { return std::holds_alternative<AffineMap>(map_); }
  const AffineMap& as_affine() const { return std::get<AffineMap>(map_); }
  /// True for a z + 1 - a with real 0 < a <= 1, where (1 - z)^s is an eigenfunction.
  bool is_phi_a_family() const;
  /// Real a of the phi_a family.
  double phi_a_parameter() const;

  AnalyticPoly as_poly() const;
  Complex operator()(Complex z) const;

  bool validated() const { return validated_; }
  /// Set when the map was produced by capped composition.
  bool approximate() const { return approximate_; }

private:
  friend bool validate_self_map(SelfMapSymbol& phi, std::size_t grid);
  friend SelfMapSymbol affine_iterate(const SelfMapSymbol& phi, long long n);
  friend SelfMapSymbol compose_symbols(const SelfMapSymbol& outer, const SelfMapSymbol& inner,
                                       std::optional<std::size_t> cap);

  std::variant<AffineMap, PolynomialMap> map_;
  bool validated_ = false;
  bool approximate_ = false;
};

/// Grid test for the self-map property: max_k |phi(e^{2 pi i k/M})| <= 1 + 1e-12
/// and |phi(0)| < 1. Marks the symbol validated on success. Requires M >= 64.
bool validate_self_map(SelfMapSymbol& phi, std::size_t grid = 1024);

/// n-fold iterate of an affine symbol, in closed form. Validation carries over.
SelfMapSymbol affine_iterate(const SelfMapSymbol& phi, long long n);

/// outer o inner. Affine pairs compose exactly; otherwise polynomial
/// composition, truncated to `cap` when given (result flagged approximate).
SelfMapSymbol compose_symbols(const SelfMapSymbol& outer, const SelfMapSymbol& inner,
                              std::optional<std::size_t> cap = std::nullopt);

struct SupBracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// H^inf weight with a bracket lower <= ||w||_inf <= upper.
struct WeightSymbol {
  AnalyticPoly poly;
  SupBracket sup;

  explicit WeightSymbol(AnalyticPoly w, std::size_t grid = 1024);
  /// w(z) = lambda z
  static WeightSymbol linear(Complex lambda) { return WeightSymbol(AnalyticPoly{0.0, lambda}); }
  static WeightSymbol one() { return WeightSymbol(AnalyticPoly{1.0}); }
};

}  // namespace wcolab
