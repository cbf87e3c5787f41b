#include "wcolab/spaces.hpp"

#include <fftw3.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "wcolab/symbols.hpp"

namespace wcolab {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

class CircleDft {
public:
  explicit CircleDft(std::size_t n) : n_(n) {
    buf_ = fftw_alloc_complex(n);
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), buf_, buf_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  CircleDft(const CircleDft&) = delete;
  CircleDft& operator=(const CircleDft&) = delete;
  ~CircleDft() {
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan_);
    }
    fftw_free(buf_);
  }

  /// Values of f at radius * e^{2 pi i k/n}; coefficients beyond n alias mod n.
  std::span<const Complex> evaluate(const AnalyticPoly& f, double radius) {
    auto* data = reinterpret_cast<Complex*>(buf_);
    std::fill(data, data + n_, Complex{0.0});
    const auto c = f.coeffs();
    double rk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      data[k % n_] += c[k] * rk;
      rk *= radius;
    }
    fftw_execute(plan_);
    return {data, n_};
  }

private:
  std::size_t n_;
  fftw_complex* buf_ = nullptr;
  fftw_plan plan_ = nullptr;
};

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

bool is_even_integer(double p) { return std::floor(p) == p && std::fmod(p, 2.0) == 0.0; }

double mean_pow(std::span<const Complex> values, double p, std::size_t stride = 1) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < values.size(); k += stride, ++count) {
    const double a = std::abs(values[k]);
    sum += p == 2.0 ? a * a : std::pow(a, p);
  }
  return sum / static_cast<double>(count);
}

void check_hardy_p(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Hardy exponent must satisfy 1 <= p < inf, got p = " + std::to_string(p));
}

void check_bergman(double p, double beta) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("Bergman exponent must satisfy 1 < p < inf, got p = " + std::to_string(p));
  if (!(beta > -1.0) || !std::isfinite(beta))
    throw std::invalid_argument("Bergman weight must satisfy beta > -1, got beta = " + std::to_string(beta));
}

const GaussJacobiRule& cached_rule(std::size_t order, double beta) {
  static std::mutex m;
  static std::map<std::pair<std::size_t, double>, GaussJacobiRule> cache;
  std::lock_guard lock(m);
  auto it = cache.find({order, beta});
  if (it == cache.end()) it = cache.emplace(std::pair{order, beta}, gauss_jacobi_unit(order, beta)).first;
  return it->second;
}

}  // namespace

SpaceSpec SpaceSpec::hardy(double p) {
  check_hardy_p(p);
  SpaceSpec s;
  s.kind = SpaceKind::hardy;
  s.p = p;
  return s;
}

SpaceSpec SpaceSpec::bergman(double p, double beta) {
  check_bergman(p, beta);
  SpaceSpec s;
  s.kind = SpaceKind::bergman;
  s.p = p;
  s.beta = beta;
  return s;
}

SpaceSpec SpaceSpec::sup(SupSide side) {
  SpaceSpec s;
  s.kind = SpaceKind::sup;
  s.side = side;
  return s;
}

std::string SpaceSpec::name() const {
  auto num = [](double x) {
    std::string s = std::to_string(x);
    s.erase(s.find_last_not_of('0') + 1);
    if (!s.empty() && s.back() == '.') s.pop_back();
    return s;
  };
  switch (kind) {
    case SpaceKind::hardy: return "H^" + num(p);
    case SpaceKind::bergman: return "A^" + num(p) + "_" + num(beta);
    case SpaceKind::sup: return side == SupSide::lower ? "H^inf(lower)" : "H^inf(upper)";
  }
  return "?";
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::exact_coefficient: return "exact-coefficient";
    case Provenance::quadrature: return "quadrature";
    case Provenance::bracket_lower: return "bracket-lower";
    case Provenance::bracket_upper: return "bracket-upper";
  }
  return "?";
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "exact-coefficient") return Provenance::exact_coefficient;
  if (s == "quadrature") return Provenance::quadrature;
  if (s == "bracket-lower") return Provenance::bracket_lower;
  if (s == "bracket-upper") return Provenance::bracket_upper;
  throw std::invalid_argument("unknown provenance tag '" + s + "'");
}

std::vector<Complex> circle_values(const AnalyticPoly& f, std::size_t grid, double radius) {
  if (grid == 0) throw std::invalid_argument("grid size must be positive");
  CircleDft dft(grid);
  auto v = dft.evaluate(f, radius);
  return {v.begin(), v.end()};
}

double grid_max_modulus(const AnalyticPoly& f, std::size_t grid) {
  CircleDft dft(grid);
  double best = 0.0;
  for (Complex v : dft.evaluate(f, 1.0)) best = std::max(best, std::abs(v));
  return best;
}

double coeff_norm_h2(const AnalyticPoly& f) {
  double sum = 0.0;
  for (Complex c : f.coeffs()) sum += std::norm(c);
  return std::sqrt(sum);
}

std::vector<double> bergman_coefficient_weights(double beta, std::size_t n) {
  if (!(beta > -1.0)) throw std::invalid_argument("Bergman weight must satisfy beta > -1");
  std::vector<double> g(n + 1);
  g[0] = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    g[k + 1] = g[k] * static_cast<double>(k + 1) / (static_cast<double>(k) + 2.0 + beta);
  return g;
}

double coeff_norm_bergman2(const AnalyticPoly& f, double beta) {
  if (!(beta > -1.0))
    throw std::invalid_argument("Bergman weight must satisfy beta > -1, got beta = " + std::to_string(beta));
  const auto c = f.coeffs();
  double sum = 0.0, gamma = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    sum += gamma * std::norm(c[k]);
    gamma *= static_cast<double>(k + 1) / (static_cast<double>(k) + 2.0 + beta);
  }
  return std::sqrt(sum);
}

double quad_norm_hp(const AnalyticPoly& f, double p, std::size_t grid) {
  check_hardy_p(p);
  if (grid < 4 * f.trimmed_degree() + 1)
    throw std::invalid_argument("angular grid M = " + std::to_string(grid) +
                                " is below 4 deg f + 1 = " + std::to_string(4 * f.trimmed_degree() + 1));
  CircleDft dft(grid);
  return std::pow(mean_pow(dft.evaluate(f, 1.0), p), 1.0 / p);
}

GaussJacobiRule gauss_jacobi_unit(std::size_t order, double beta) {
  if (order == 0) throw std::invalid_argument("Gauss-Jacobi order must be positive");
  if (!(beta > -1.0)) throw std::invalid_argument("Gauss-Jacobi exponent must satisfy beta > -1");
  // Golub-Welsch for the Jacobi weight (1-x)^beta (1+x)^0 on [-1, 1], mapped
  // to u = (1+x)/2. Recurrence entries of the monic Jacobi polynomials.
  const double a = beta;
  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(order > 1 ? order - 1 : 1);
  for (std::size_t i = 0; i < order; ++i) {
    const double n = static_cast<double>(i);
    const double t = 2.0 * n + a;
    const double an = i == 0 ? -a / (a + 2.0) : -(a * a) / (t * (t + 2.0));
    diag[static_cast<Eigen::Index>(i)] = 0.5 * (1.0 + an);
    if (i + 1 < order) {
      const double m = n + 1.0;
      const double s = 2.0 * m + a;
      const double bm = 2.0 * m * (m + a) / (s * std::sqrt(s * s - 1.0));
      sub[static_cast<Eigen::Index>(i)] = 0.5 * bm;
    }
  }
  GaussJacobiRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  if (order == 1) {
    rule.nodes[0] = diag[0];
    rule.weights[0] = 1.0;
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("Gauss-Jacobi eigensolver failed");
  for (std::size_t i = 0; i < order; ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    rule.nodes[i] = solver.eigenvalues()[k];
    const double v0 = solver.eigenvectors()(0, k);
    rule.weights[i] = v0 * v0;
  }
  return rule;
}

double quad_norm_bergman_p(const AnalyticPoly& f, double p, double beta, std::size_t radial_order,
                           std::size_t grid) {
  check_bergman(p, beta);
  return quad_norm_bergman_p(f, p, cached_rule(radial_order, beta), grid);
}

double quad_norm_bergman_p(const AnalyticPoly& f, double p, const GaussJacobiRule& rule,
                           std::size_t grid) {
  if (!(p > 1.0)) throw std::invalid_argument("Bergman exponent must satisfy p > 1");
  CircleDft dft(grid);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double r = std::sqrt(std::max(rule.nodes[i], 0.0));
    total += rule.weights[i] * mean_pow(dft.evaluate(f, r), p);
  }
  return std::pow(total, 1.0 / p);
}

SupBracket sup_norm_bracket(const AnalyticPoly& f, std::size_t grid) {
  if (grid < 64) throw std::invalid_argument("sup bracket grid must have M >= 64");
  SupBracket b;
  b.lower = grid_max_modulus(f, grid);
  for (Complex c : f.coeffs()) b.upper += std::abs(c);
  // Rounding in the DFT can push the grid value a hair above the coefficient sum.
  b.lower = std::min(b.lower, b.upper);
  return b;
}

std::size_t auto_grid(std::size_t degree, double p) {
  const double pc = std::ceil(std::max(p, 1.0));
  const auto by_p = static_cast<std::size_t>(pc) * degree + 1;
  return next_pow2(std::max<std::size_t>({64, 4 * degree + 1, by_p}));
}

NormValue norm(const AnalyticPoly& f, const SpaceSpec& spec) {
  const std::size_t d = f.trimmed_degree();
  switch (spec.kind) {
    case SpaceKind::hardy: {
      if (spec.p == 2.0) return {coeff_norm_h2(f), Provenance::exact_coefficient, true};
      check_hardy_p(spec.p);
      std::size_t grid = std::max(spec.angular_grid, auto_grid(d, spec.p));
      if (is_even_integer(spec.p)) return {quad_norm_hp(f, spec.p, grid), Provenance::quadrature, true};
      // Non-even p: refine by doubling until the trapezoid sum settles. The
      // M-point sum is the even-index subsample of the 2M-point grid.
      constexpr int max_doublings = 6;
      double coarse = 0.0, fine = 0.0;
      for (int it = 0; it < max_doublings; ++it) {
        CircleDft dft(2 * grid);
        auto values = dft.evaluate(f, 1.0);
        coarse = mean_pow(values, spec.p, 2);
        fine = mean_pow(values, spec.p, 1);
        if (std::abs(fine - coarse) <= 1e-9 * std::abs(fine)) {
          return {std::pow(fine, 1.0 / spec.p), Provenance::quadrature, true};
        }
        grid *= 2;
      }
      return {std::pow(fine, 1.0 / spec.p), Provenance::quadrature, false};
    }
    case SpaceKind::bergman: {
      if (spec.p == 2.0) return {coeff_norm_bergman2(f, spec.beta), Provenance::exact_coefficient, true};
      check_bergman(spec.p, spec.beta);
      const std::size_t grid = std::max(spec.angular_grid, auto_grid(d, spec.p));
      return {quad_norm_bergman_p(f, spec.p, spec.beta, spec.radial_order, grid), Provenance::quadrature, true};
    }
    case SpaceKind::sup: {
      const std::size_t grid = std::max<std::size_t>(spec.angular_grid, std::max<std::size_t>(1024, auto_grid(d)));
      const SupBracket b = sup_norm_bracket(f, grid);
      if (spec.side == SupSide::lower) return {b.lower, Provenance::bracket_lower, true};
      return {b.upper, Provenance::bracket_upper, true};
    }
  }
  return {};
}

}  // namespace wcolab
