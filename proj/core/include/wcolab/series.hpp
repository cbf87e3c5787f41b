#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace wcolab {

using Complex = std::complex<double>;

/// Analytic function on the disk stored as its (finite) Maclaurin coefficient
/// sequence c_0, ..., c_d. The zero function is the single coefficient 0.
///
/// Arithmetic between two polynomials is exact polynomial arithmetic; a degree
/// cap is only applied by the operations that take one explicitly.
class AnalyticPoly {
public:
  AnalyticPoly() : coeffs_{Complex{0.0}} {}
  AnalyticPoly(std::initializer_list<Complex> coeffs);
  explicit AnalyticPoly(std::vector<Complex> coeffs);

  static AnalyticPoly constant(Complex c) { return AnalyticPoly{c}; }
  /// c * z^k
  static AnalyticPoly monomial(std::size_t k, Complex c = 1.0);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  Complex operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{0.0};
  }

  /// Degree after dropping trailing zero coefficients.
  std::size_t trimmed_degree() const;
  AnalyticPoly trimmed() const;

  /// Horner evaluation.
  Complex operator()(Complex z) const;

  AnalyticPoly& operator+=(const AnalyticPoly& other);
  AnalyticPoly& operator-=(const AnalyticPoly& other);
  AnalyticPoly& operator*=(Complex c);

  friend AnalyticPoly operator+(AnalyticPoly f, const AnalyticPoly& g) { return f += g; }
  friend AnalyticPoly operator-(AnalyticPoly f, const AnalyticPoly& g) { return f -= g; }
  friend AnalyticPoly operator*(AnalyticPoly f, Complex c) { return f *= c; }
  friend AnalyticPoly operator*(Complex c, AnalyticPoly f) { return f *= c; }
  /// Exact Cauchy product, degree d_f + d_g.
  friend AnalyticPoly operator*(const AnalyticPoly& f, const AnalyticPoly& g);

  /// Equality up to trailing zeros.
  friend bool operator==(const AnalyticPoly& f, const AnalyticPoly& g);

private:
  std::vector<Complex> coeffs_;
};

enum class ArithKind { add, scale, mul };

/// Dispatching form of the three ring operations; `c` is only read for scale.
AnalyticPoly poly_arith(const AnalyticPoly& f, const AnalyticPoly& g, ArithKind kind,
                        Complex c = 1.0);

/// Cauchy product keeping only coefficients 0..cap. The kept coefficients are
/// exactly those of the full product.
AnalyticPoly mul_truncated(const AnalyticPoly& f, const AnalyticPoly& g, std::size_t cap);

/// f(alpha*z + gamma), exact, by Horner recurrence in O(d^2).
AnalyticPoly compose_affine(const AnalyticPoly& f, Complex alpha, Complex gamma);

/// f(g(z)) by Horner recurrence; with a cap every intermediate is truncated to
/// degree <= cap (the kept coefficients are exact).
AnalyticPoly compose(const AnalyticPoly& f, const AnalyticPoly& g,
                     std::optional<std::size_t> cap = std::nullopt);

/// Coefficients d_0..d_D of (1 - z)^s: d_0 = 1, d_{k+1} = d_k (k - s)/(k + 1).
AnalyticPoly binomial_series(Complex s, std::size_t degree);

inline Complex eval_point(const AnalyticPoly& f, Complex z) { return f(z); }

/// Largest |c_k - d_k| relative to max(1, max|c_k|, max|d_k|).
double max_coeff_distance(const AnalyticPoly& f, const AnalyticPoly& g);

}  // namespace wcolab
