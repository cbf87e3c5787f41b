#include "wcolab/symbols.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "wcolab/spaces.hpp"

namespace wcolab {

namespace {

Complex ipow(Complex base, unsigned long long n) {
  Complex result{1.0};
  while (n) {
    if (n & 1ULL) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace

SelfMapSymbol SelfMapSymbol::phi_a(double a) {
  SelfMapSymbol s;
  s.map_ = AffineMap{a, 1.0 - a, true};
  return s;
}

SelfMapSymbol SelfMapSymbol::affine(Complex alpha, Complex gamma) {
  SelfMapSymbol s;
  s.map_ = AffineMap{alpha, gamma, gamma == Complex{1.0} - alpha};
  return s;
}

SelfMapSymbol SelfMapSymbol::rotation(double theta) {
  return affine(std::polar(1.0, theta), 0.0);
}

SelfMapSymbol SelfMapSymbol::polynomial(AnalyticPoly poly) {
  if (poly.trimmed_degree() <= 1) return affine(poly[1], poly[0]);
  SelfMapSymbol s;
  s.map_ = PolynomialMap{poly.trimmed()};
  return s;
}

bool SelfMapSymbol::is_phi_a_family() const {
  if (!is_affine()) return false;
  const auto& m = as_affine();
  return m.fixes_one && m.alpha.imag() == 0.0 && m.alpha.real() > 0.0 && m.alpha.real() <= 1.0;
}

double SelfMapSymbol::phi_a_parameter() const {
  if (!is_phi_a_family()) throw std::invalid_argument("symbol is not of the form a z + 1 - a");
  return as_affine().alpha.real();
}

AnalyticPoly SelfMapSymbol::as_poly() const {
  if (is_affine()) return AnalyticPoly{as_affine().gamma, as_affine().alpha};
  return std::get<PolynomialMap>(map_).poly;
}

Complex SelfMapSymbol::operator()(Complex z) const {
  if (is_affine()) return as_affine().alpha * z + as_affine().gamma;
  return std::get<PolynomialMap>(map_).poly(z);
}

bool validate_self_map(SelfMapSymbol& phi, std::size_t grid) {
  if (grid < 64) throw std::invalid_argument("self-map validation grid must have M >= 64");
  const AnalyticPoly p = phi.as_poly();
  const double boundary = grid_max_modulus(p, grid);
  const bool ok = boundary <= 1.0 + 1e-12 && std::abs(p[0]) < 1.0;
  phi.validated_ = ok;
  return ok;
}

SelfMapSymbol affine_iterate(const SelfMapSymbol& phi, long long n) {
  if (n < 0) throw std::invalid_argument("iterate count must be nonnegative, got " + std::to_string(n));
  if (!phi.is_affine()) throw std::invalid_argument("closed-form iteration needs an affine symbol");
  const AffineMap& m = phi.as_affine();
  const Complex an = ipow(m.alpha, static_cast<unsigned long long>(n));
  SelfMapSymbol out;
  if (m.fixes_one) {
    out.map_ = AffineMap{an, Complex{1.0} - an, true};
  } else if (m.alpha == Complex{1.0}) {
    out.map_ = AffineMap{1.0, static_cast<double>(n) * m.gamma, m.gamma == Complex{0.0}};
  } else {
    out.map_ = AffineMap{an, m.gamma * (Complex{1.0} - an) / (Complex{1.0} - m.alpha), false};
  }
  out.validated_ = phi.validated_;
  return out;
}

SelfMapSymbol compose_symbols(const SelfMapSymbol& outer, const SelfMapSymbol& inner,
                              std::optional<std::size_t> cap) {
  SelfMapSymbol out;
  if (outer.is_affine() && inner.is_affine()) {
    const AffineMap& o = outer.as_affine();
    const AffineMap& i = inner.as_affine();
    const Complex alpha = o.alpha * i.alpha;
    if (o.fixes_one && i.fixes_one)
      out.map_ = AffineMap{alpha, Complex{1.0} - alpha, true};
    else
      out.map_ = AffineMap{alpha, o.alpha * i.gamma + o.gamma, false};
  } else {
    AnalyticPoly p = compose(outer.as_poly(), inner.as_poly(), cap);
    const bool truncated = cap && outer.as_poly().degree() * inner.as_poly().degree() > *cap;
    out.map_ = PolynomialMap{std::move(p)};
    out.approximate_ = truncated;
  }
  out.approximate_ = out.approximate_ || outer.approximate_ || inner.approximate_;
  out.validated_ = outer.validated_ && inner.validated_;
  return out;
}

WeightSymbol::WeightSymbol(AnalyticPoly w, std::size_t grid) : poly(std::move(w)) {
  sup = sup_norm_bracket(poly, grid);
}

}  // namespace wcolab
