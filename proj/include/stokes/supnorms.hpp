#pragma once

// Closed-form (directional) sup norms of the eigenfunctions, the corner and
// critical-point machinery behind them, and a grid maximisation oracle that
// certifies lower bounds for every supremum.

#include <array>
#include <optional>

#include "stokes/eigenbasis.hpp"

namespace stokes {

/// Unit vector e = (a, b, c).
struct Direction {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;

  double operator[](int i) const noexcept { return i == 0 ? a : (i == 1 ? b : c); }

  /// Scales (a, b, c) to unit length; throws DomainError for the zero vector.
  static Direction normalized(double a, double b, double c);
};

/// Throws DomainError unless |a^2 + b^2 + c^2 - 1| <= 1e-12.
void validate(const Direction& e);

/// Coefficients of e . W_{m,n,p} after removing the normalisation:
/// A = a(n^2+p^2), B = -b m n, C = -c m p.
struct ProjectionCoeffs {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

ProjectionCoeffs projection_coeffs(const Mode& w_mode, const Direction& e);

struct GridSpec {
  int points_per_axis = 120;
  bool refine = true;
};

void validate(const GridSpec& grid);

/// Closed form of ||phi||^2 in L^inf.
double sup_norm_sq(const Mode& mode);

/// Closed form of ||e . phi||^2 in L^inf as stated for each family. For W this
/// is the published claim, which the grid oracle adjudicates rather than
/// trusts. Requires a unit direction.
double dir_sup_norm_sq(const Mode& mode, const Direction& e);

/// Same expressions without the unit-length check; homogeneous of degree 2 in
/// (a, b, c).
double dir_sup_norm_sq_raw(const Mode& mode, double a, double b, double c);

struct GridMax {
  double value = 0.0;
  Point3 argmax{};
};

/// max |phi|^2 (or (e . phi)^2 when e is given) over a tensor grid on the
/// closed cube, plus one level of x10 local refinement around the incumbent.
/// Axes the field does not depend on are collapsed to the single node 0; for V
/// the x axis is collapsed as well (cos^2(m x) attains 1 at x = 0). The value
/// is attained at argmax, hence a lower bound of the true supremum. Ties keep
/// the lexicographically smallest grid point.
GridMax grid_sup_sq_oracle(const Mode& mode, const std::optional<Direction>& e,
                           const GridSpec& grid);

/// Upper bound on (supremum - grid value): Lipschitz constant of the squared
/// field times pi / points_per_axis.
double oracle_gap_bound(const Mode& mode, const std::optional<Direction>& e, const GridSpec& grid);

/// Maximum over the corners of [0,1]^2 of p^2 Y (1-Z) + n^2 (1-Y) Z, i.e. max{n^2, p^2}.
double bilinear_corner_max(int n, int p);

/// Maximum over the corners of [0,1]^3 of
/// (n^2+p^2)^2 X(1-Y)(1-Z) + m^2 n^2 (1-X) Y (1-Z) + m^2 p^2 (1-X)(1-Y) Z.
double trilinear_corner_max(int m, int n, int p);

struct Case22 {
  double D = 0.0;
  std::array<double, 3> cos_sq{};
  bool feasible = false;
};

/// Interior critical value of K^2 / C^2 when A^2, B^2 <= C^2, alpha = A^2/C^2,
/// beta = B^2/C^2:
///   D = 4 alpha beta / (2(alpha beta + alpha + beta) - alpha^2 - beta^2 - 1)
/// together with cos^2 of the three critical angles. Accepts (alpha, beta) in
/// (0,1]^2 with alpha + beta >= 1; throws DomainError elsewhere or when the
/// denominator is not positive.
Case22 case22_value(double alpha, double beta);

/// Value of K^2 at an interior critical point with ABC != 0, if one exists
/// (largest square normalised to 1, the others inside the admissible triangle).
std::optional<double> interior_critical_sq(const ProjectionCoeffs& k);

/// 8 / (pi^3 (n^2+p^2)(m^2+n^2+p^2)), the factor turning K^2 into (e . W)^2.
double w_normalisation_sq(const Mode& w_mode);

}  // namespace stokes
