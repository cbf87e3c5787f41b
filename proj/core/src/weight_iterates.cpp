#include "wcolab/weight_iterates.hpp"

#include <stdexcept>
#include <string>

namespace wcolab {

AnalyticPoly compose_with(const AnalyticPoly& f, const SelfMapSymbol& phi,
                          std::optional<std::size_t> cap) {
  if (phi.is_affine()) return compose_affine(f, phi.as_affine().alpha, phi.as_affine().gamma);
  return compose(f, phi.as_poly(), cap);
}

WeightIterateCache::WeightIterateCache(WeightSymbol w, SelfMapSymbol phi, std::size_t horizon,
                                       std::optional<std::size_t> cap)
    : w_(std::move(w)), phi_(std::move(phi)), cap_(cap) {
  if (!phi_.validated()) throw std::invalid_argument("self-map symbol has not been validated");
  if (horizon < 1) throw std::invalid_argument("weight iterate horizon must be >= 1");
  if (!phi_.is_affine() && !cap_)
    throw std::invalid_argument("a non-affine symbol needs an explicit degree cap for iteration");

  iterates_.reserve(horizon);
  symbol_iterates_.reserve(horizon + 1);
  SelfMapSymbol id = SelfMapSymbol::identity();
  validate_self_map(id);
  symbol_iterates_.push_back(std::move(id));

  auto capped = [&](AnalyticPoly p) {
    if (cap_ && p.degree() > *cap_) {
      truncated_ = true;
      return mul_truncated(p, AnalyticPoly{1.0}, *cap_);
    }
    return p;
  };

  iterates_.push_back(capped(w_.poly));
  for (std::size_t n = 1; n <= horizon; ++n) {
    SelfMapSymbol next = phi_.is_affine() ? affine_iterate(phi_, static_cast<long long>(n))
                         : n == 1         ? phi_
                                          : compose_symbols(symbol_iterates_.back(), phi_, cap_);
    if (next.approximate()) truncated_ = true;
    symbol_iterates_.push_back(std::move(next));
    if (n == horizon) break;
    // w^(n+1) = w^(n) * (w o phi^n)
    const AnalyticPoly factor = compose_with(w_.poly, symbol_iterates_.back(), cap_);
    if (cap_) {
      const AnalyticPoly& prev = iterates_.back();
      if (prev.degree() + factor.degree() > *cap_) truncated_ = true;
      iterates_.push_back(mul_truncated(prev, factor, *cap_));
    } else {
      iterates_.push_back(iterates_.back() * factor);
    }
  }
}

const AnalyticPoly& WeightIterateCache::weight_iterate(std::size_t n) const {
  if (n < 1 || n > iterates_.size())
    throw std::out_of_range("weight iterate index " + std::to_string(n) + " outside [1, " +
                            std::to_string(iterates_.size()) + "]");
  return iterates_[n - 1];
}

const SelfMapSymbol& WeightIterateCache::symbol_iterate(std::size_t n) const {
  if (n >= symbol_iterates_.size())
    throw std::out_of_range("symbol iterate index " + std::to_string(n) + " beyond horizon " +
                            std::to_string(iterates_.size()));
  return symbol_iterates_[n];
}

}  // namespace wcolab
