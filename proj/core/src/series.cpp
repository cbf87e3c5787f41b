#include "wcolab/series.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wcolab {

AnalyticPoly::AnalyticPoly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

AnalyticPoly::AnalyticPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
}

AnalyticPoly AnalyticPoly::monomial(std::size_t k, Complex c) {
  std::vector<Complex> v(k + 1, Complex{0.0});
  v[k] = c;
  return AnalyticPoly(std::move(v));
}

std::size_t AnalyticPoly::trimmed_degree() const {
  std::size_t d = coeffs_.size() - 1;
  while (d > 0 && coeffs_[d] == Complex{0.0}) --d;
  return d;
}

AnalyticPoly AnalyticPoly::trimmed() const {
  return AnalyticPoly(std::vector<Complex>(coeffs_.begin(),
                                           coeffs_.begin() + trimmed_degree() + 1));
}

Complex AnalyticPoly::operator()(Complex z) const {
  Complex acc{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

AnalyticPoly& AnalyticPoly::operator+=(const AnalyticPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

AnalyticPoly& AnalyticPoly::operator-=(const AnalyticPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

AnalyticPoly& AnalyticPoly::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

std::vector<Complex> cauchy(std::span<const Complex> f, std::span<const Complex> g,
                            std::size_t cap) {
  const std::size_t full = f.size() + g.size() - 2;
  const std::size_t top = std::min(full, cap);
  std::vector<Complex> out(top + 1, Complex{0.0});
  for (std::size_t i = 0; i < f.size() && i <= top; ++i) {
    const Complex fi = f[i];
    if (fi == Complex{0.0}) continue;
    const std::size_t jmax = std::min(g.size() - 1, top - i);
    Complex* dst = out.data() + i;
    for (std::size_t j = 0; j <= jmax; ++j) dst[j] += fi * g[j];
  }
  return out;
}

}  // namespace

AnalyticPoly operator*(const AnalyticPoly& f, const AnalyticPoly& g) {
  return AnalyticPoly(cauchy(f.coeffs(), g.coeffs(), f.degree() + g.degree()));
}

bool operator==(const AnalyticPoly& f, const AnalyticPoly& g) {
  const std::size_t df = f.trimmed_degree();
  if (df != g.trimmed_degree()) return false;
  for (std::size_t k = 0; k <= df; ++k)
    if (f.coeffs_[k] != g.coeffs_[k]) return false;
  return true;
}

AnalyticPoly poly_arith(const AnalyticPoly& f, const AnalyticPoly& g, ArithKind kind,
                        Complex c) {
  switch (kind) {
    case ArithKind::add: return f + g;
    case ArithKind::scale: return f * c;
    case ArithKind::mul: return f * g;
  }
  return f;
}

AnalyticPoly mul_truncated(const AnalyticPoly& f, const AnalyticPoly& g, std::size_t cap) {
  return AnalyticPoly(cauchy(f.coeffs(), g.coeffs(), cap));
}

AnalyticPoly compose_affine(const AnalyticPoly& f, Complex alpha, Complex gamma) {
  const auto c = f.coeffs();
  const std::size_t d = f.degree();
  // acc holds the polynomial sum_{j>=k} c_j (alpha z + gamma)^{j-k}.
  std::vector<Complex> acc(d + 1, Complex{0.0});
  acc[0] = c[d];
  std::size_t len = 1;
  for (std::size_t k = d; k-- > 0;) {
    // acc <- acc * (alpha z + gamma) + c_k, in place from the top down.
    acc[len] = alpha * acc[len - 1];
    for (std::size_t j = len - 1; j > 0; --j) acc[j] = gamma * acc[j] + alpha * acc[j - 1];
    acc[0] = gamma * acc[0] + c[k];
    ++len;
  }
  return AnalyticPoly(std::move(acc));
}

AnalyticPoly compose(const AnalyticPoly& f, const AnalyticPoly& g,
                     std::optional<std::size_t> cap) {
  if (g.trimmed_degree() <= 1) return compose_affine(f, g[1], g[0]);
  const auto c = f.coeffs();
  AnalyticPoly acc = AnalyticPoly::constant(c[f.degree()]);
  for (std::size_t k = f.degree(); k-- > 0;) {
    acc = cap ? mul_truncated(acc, g, *cap) : acc * g;
    acc += AnalyticPoly::constant(c[k]);
  }
  return acc;
}

AnalyticPoly binomial_series(Complex s, std::size_t degree) {
  std::vector<Complex> d(degree + 1);
  d[0] = 1.0;
  for (std::size_t k = 0; k < degree; ++k)
    d[k + 1] = d[k] * (static_cast<double>(k) - s) / static_cast<double>(k + 1);
  return AnalyticPoly(std::move(d));
}

double max_coeff_distance(const AnalyticPoly& f, const AnalyticPoly& g) {
  const std::size_t n = std::max(f.degree(), g.degree()) + 1;
  double diff = 0.0, scale = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    diff = std::max(diff, std::abs(f[k] - g[k]));
    scale = std::max({scale, std::abs(f[k]), std::abs(g[k])});
  }
  return diff / scale;
}

}  // namespace wcolab
