#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wcolab/series.hpp"
#include "wcolab/symbols.hpp"

namespace wcolab {

/// w^(1..horizon) and phi^(1..horizon) for one (w, phi) pair, built by
/// w^(n+1) = w^(n) * (w o phi^n). Immutable once built.
class WeightIterateCache {
public:
  /// Throws std::invalid_argument for an unvalidated phi, horizon < 1, or a
  /// non-affine phi without a degree cap.
  WeightIterateCache(WeightSymbol w, SelfMapSymbol phi, std::size_t horizon,
                     std::optional<std::size_t> cap = std::nullopt);

  std::size_t horizon() const { return iterates_.size(); }
  const WeightSymbol& weight() const { return w_; }
  const SelfMapSymbol& symbol() const { return phi_; }

  /// w^(n), 1 <= n <= horizon.
  const AnalyticPoly& weight_iterate(std::size_t n) const;
  /// phi^n, 0 <= n <= horizon (phi^0 is the identity).
  const SelfMapSymbol& symbol_iterate(std::size_t n) const;

  std::optional<std::size_t> cap() const { return cap_; }
  /// True when some stored polynomial lost coefficients to the cap.
  bool truncated() const { return truncated_; }

private:
  WeightSymbol w_;
  SelfMapSymbol phi_;
  std::optional<std::size_t> cap_;
  bool truncated_ = false;
  std::vector<AnalyticPoly> iterates_;
  std::vector<SelfMapSymbol> symbol_iterates_;
};

inline WeightIterateCache weight_iterate_sequence(WeightSymbol w, SelfMapSymbol phi, std::size_t horizon,
                                                  std::optional<std::size_t> cap = std::nullopt) {
  return WeightIterateCache(std::move(w), std::move(phi), horizon, cap);
}

/// f o phi for a symbol (exact for affine phi).
AnalyticPoly compose_with(const AnalyticPoly& f, const SelfMapSymbol& phi,
                          std::optional<std::size_t> cap = std::nullopt);

}  // namespace wcolab
