#pragma once

// Explicit eigenfunctions of the Stokes problem on the cube (0,pi)^3 with the
// mixed slip boundary conditions
//
//   phi_1 = d_x phi_2 = d_x phi_3 = 0   on x in {0, pi}   (and cyclic analogues).
//
// Five families are available. Every component of every eigenfunction is a
// single separable product amp * f(m x) * g(n y) * h(p z) with f, g, h in
// {sin, cos}; the separable form drives evaluation, differentiation, the grid
// oracles and the tensor quadrature.

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stokes {

enum class Family : std::uint8_t { X0, Y0, Z0, V, W };

inline constexpr std::array<Family, 5> kAllFamilies = {Family::X0, Family::Y0, Family::Z0,
                                                       Family::V, Family::W};

const char* to_string(Family f) noexcept;
Family family_from_string(const std::string& name);

/// One eigenfunction: family tag plus indices. An index that does not occur in
/// the family (m for X0, n for Y0, p for Z0) is stored as 0.
struct Mode {
  Family family = Family::W;
  int m = 1;
  int n = 1;
  int p = 1;

  static Mode x0(int n, int p) { return {Family::X0, 0, n, p}; }
  static Mode y0(int m, int p) { return {Family::Y0, m, 0, p}; }
  static Mode z0(int m, int n) { return {Family::Z0, m, n, 0}; }
  static Mode v(int m, int n, int p) { return {Family::V, m, n, p}; }
  static Mode w(int m, int n, int p) { return {Family::W, m, n, p}; }

  friend bool operator==(const Mode&, const Mode&) = default;
};

std::string to_string(const Mode& mode);

/// Throws DomainError unless the index pattern matches the family.
void validate(const Mode& mode);
bool is_valid(const Mode& mode) noexcept;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int axis) const noexcept { return axis == 0 ? x : (axis == 1 ? y : z); }
};

/// Throws DomainError unless every coordinate lies in [0, pi].
void validate(const Point3& point);

using FieldValue = std::array<double, 3>;

enum class QuadScheme : std::uint8_t { UniformTrapezoid, Gauss };

struct QuadSpec {
  int nodes_per_axis = 16;
  QuadScheme scheme = QuadScheme::UniformTrapezoid;
  double fd_step = 1e-4;
};

void validate(const QuadSpec& spec);

enum class Trig : std::uint8_t { Sin, Cos };

/// amp * t[0](k[0] x) * t[1](k[1] y) * t[2](k[2] z), k = (m, n, p).
struct SeparableTerm {
  double amp = 0.0;
  std::array<Trig, 3> trig{Trig::Cos, Trig::Cos, Trig::Cos};
};

/// Component-wise separable representation of an eigenfunction.
struct SeparableField {
  std::array<int, 3> wavenumber{0, 0, 0};
  std::array<SeparableTerm, 3> component{};
};

SeparableField separable_form(const Mode& mode);

/// lambda with -Laplace(phi) = lambda * phi.
int eigenvalue(const Mode& mode);

FieldValue evaluate(const Mode& mode, const Point3& point);

/// Analytic divergence from term-wise differentiation.
double divergence(const Mode& mode, const Point3& point);

/// Analytic Jacobian, row c = gradient of component c.
std::array<FieldValue, 3> jacobian(const Mode& mode, const Point3& point);

struct FdResidual {
  double eigen_residual = 0.0;  // max_c |(-Lap_h phi - lambda phi)_c|
  double div_residual = 0.0;    // |div_h phi|
};

/// Central-difference check of -Lap(phi) = lambda phi and div(phi) = 0.
/// Throws DomainError when the point is closer than 2*fd_step to the boundary.
FdResidual fd_residual(const Mode& mode, const Point3& point, const QuadSpec& spec);

struct ModeEntry {
  Mode mode;
  int eigenvalue = 0;
};

/// Every valid mode with eigenvalue <= lambda_max, ordered by eigenvalue, then
/// family (X0 < Y0 < Z0 < V < W), then (m, n, p).
std::vector<ModeEntry> enumerate_modes(double lambda_max);

/// Modes of one family with every occurring index in [1, cutoff], in the same
/// ordering as enumerate_modes.
std::vector<ModeEntry> family_modes(Family family, int cutoff);

/// Largest wavenumber appearing in the mode.
int max_wavenumber(const Mode& mode) noexcept;

/// Integral of phi_i . phi_j over the cube by a tensor-product rule.
/// Throws PreconditionError when nodes_per_axis < 2 * (max wavenumber) + 2.
double inner_product(const Mode& mode_i, const Mode& mode_j, const QuadSpec& spec);

/// Integral of grad(phi_i) : grad(phi_j) over the cube; equals lambda_i * delta_ij
/// for the eigenfunctions.
double gradient_inner_product(const Mode& mode_i, const Mode& mode_j, const QuadSpec& spec);

/// Gram matrix (row-major) of the given modes under inner_product.
std::vector<double> gram_matrix(const std::vector<Mode>& modes, const QuadSpec& spec);

/// Max-norm difference between a V or W mode and its expression through the
/// X0 (for V) or Y0/Z0 (for W) eigenfunctions with trigonometric coefficients.
/// Throws DomainError for X0, Y0, Z0.
double factorization_residual(const Mode& mode, const Point3& point);

}  // namespace stokes
