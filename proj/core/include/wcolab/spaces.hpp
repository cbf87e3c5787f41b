#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wcolab/series.hpp"

namespace wcolab {

struct SupBracket;

enum class SpaceKind { hardy, bergman, sup };
enum class SupSide { lower, upper };

/// Which norm ||.||_X to evaluate, plus quadrature parameters.
/// angular_grid == 0 selects the grid automatically from the polynomial degree.
struct SpaceSpec {
  SpaceKind kind = SpaceKind::hardy;
  double p = 2.0;
  double beta = 0.0;
  SupSide side = SupSide::upper;
  std::size_t angular_grid = 0;
  std::size_t radial_order = 128;

  /// H^p, 1 <= p < inf.
  static SpaceSpec hardy(double p);
  /// A^p_beta, 1 < p < inf, beta > -1.
  static SpaceSpec bergman(double p, double beta);
  static SpaceSpec sup(SupSide side = SupSide::upper);

  /// Hardy(2) and Bergman(2, beta) have exact coefficient formulas.
  bool is_hilbert() const { return kind != SpaceKind::sup && p == 2.0; }
  std::string name() const;
};

/// How a norm value relates to the true norm; decides which certificate
/// directions it can support.
enum class Provenance { exact_coefficient, quadrature, bracket_lower, bracket_upper };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

struct NormValue {
  double value = 0.0;
  Provenance provenance = Provenance::exact_coefficient;
  /// False when grid doubling did not settle to 1e-9 relative.
  bool converged = true;
};

/// f(r e^{2 pi i k / M}) for k = 0..M-1, computed as one DFT.
std::vector<Complex> circle_values(const AnalyticPoly& f, std::size_t grid, double radius = 1.0);

double grid_max_modulus(const AnalyticPoly& f, std::size_t grid);

/// sqrt(sum |c_k|^2).
double coeff_norm_h2(const AnalyticPoly& f);

/// gamma_0..gamma_n of the A^2_beta norm: gamma_{k+1} = gamma_k (k+1)/(k+2+beta).
std::vector<double> bergman_coefficient_weights(double beta, std::size_t n);

/// sqrt(sum gamma_k(beta) |c_k|^2). Throws for beta <= -1.
double coeff_norm_bergman2(const AnalyticPoly& f, double beta);

/// Trapezoid mean of |f|^p on the M-point boundary grid, p-th root. The radial
/// sup of a polynomial is attained at r = 1, so no radial sweep is needed.
double quad_norm_hp(const AnalyticPoly& f, double p, std::size_t grid);

/// Nodes/weights on [0, 1] for the probability measure (beta+1)(1-u)^beta du.
struct GaussJacobiRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussJacobiRule gauss_jacobi_unit(std::size_t order, double beta);

/// (beta+1) int_0^1 (1-u)^beta Phi(sqrt u) du with Phi the angular mean of |f|^p.
double quad_norm_bergman_p(const AnalyticPoly& f, double p, double beta, std::size_t radial_order,
                           std::size_t grid);
double quad_norm_bergman_p(const AnalyticPoly& f, double p, const GaussJacobiRule& rule,
                           std::size_t grid);

/// lower = max of |f| on the boundary grid, upper = sum |c_k|.
SupBracket sup_norm_bracket(const AnalyticPoly& f, std::size_t grid = 1024);

/// Default grid for a degree-d polynomial: power of two >= max(64, 4d+1, ceil(p) d + 1).
std::size_t auto_grid(std::size_t degree, double p = 2.0);

/// Norm of f in `spec`, choosing the exact formula where one exists.
NormValue norm(const AnalyticPoly& f, const SpaceSpec& spec);

}  // namespace wcolab
