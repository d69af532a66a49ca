#pragma once

// The function Upsilon, closed forms of the quadrant/octant integrals that
// bound the spectral sums, quadrature oracles for their left-hand sides, and
// partial sums of the squared projections over each eigenfunction family.

#include <cstdint>

#include "stokes/eigenbasis.hpp"
#include "stokes/quadrature.hpp"
#include "stokes/supnorms.hpp"

namespace stokes {

/// Upsilon(b, c) = b^2 atan|c/b| + c^2 atan|b/c| + |bc| with atan(+inf) = pi/2
/// and 0 * atan(+inf) = 0.
double upsilon(double b, double c);

/// d Upsilon / d b = 2c^3/(b^2+c^2) + 2b atan(c/b), for b > 0, c >= 0.
double upsilon_db(double b, double c);

/// Exact value of 2 * int_0^{pi/2} max{b^2 cos^2 t, c^2 sin^2 t} dt, namely
/// b^2 atan|b/c| + c^2 atan|c/b| + |bc|. Coincides with upsilon only when
/// |b| = |c| or b = c = 0.
double angular_integral_exact(double b, double c);

enum class IntegralKind : std::uint8_t { Angular, I1, I2, I3 };

const char* to_string(IntegralKind kind) noexcept;

struct IntegralQuery {
  IntegralKind kind = IntegralKind::I1;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double mu = 1.0;
};

/// Throws DomainError unless mu > 0 and a^2 + b^2 + c^2 <= 1 (within 1e-12).
void validate(const IntegralQuery& q);

/// Angular: Upsilon(b,c). I1: Upsilon/(4 mu). I2: pi Upsilon/(8 sqrt(mu)).
/// I3: pi/(12 sqrt(mu)) [pi a^2 + Upsilon/2], which is an upper bound.
double closed_integral(const IntegralQuery& q);

/// Left-hand side of the identity for q.kind:
///   angular  2 int_0^{pi/2} max{b^2 cos^2, c^2 sin^2}
///   I1       int int max{b^2 y^2, c^2 x^2} / ((x^2+y^2)(x^2+y^2+mu)^2)
///   I2       int int int max{b^2 y^2, c^2 x^2} / ((x^2+y^2)(x^2+y^2+z^2+mu)^2)
///   I3       int int int max{a^2 (y^2+z^2)^2, b^2 x^2 y^2, c^2 x^2 z^2}
///                / ((y^2+z^2)(x^2+y^2+z^2)(x^2+y^2+z^2+mu)^2)
/// over the positive quadrant/octant, by nested adaptive Gauss-Kronrod on the
/// compactified axes with exact splits at the kinks of the max. `tol` is the
/// absolute target of the outermost integral. Throws AccuracyError when a
/// panel budget runs out.
double quad_integral(const IntegralQuery& q, double tol = 1e-10);

struct SumSpec {
  Family family = Family::X0;
  Direction e{};
  Point3 point{};
  double mu = 1.0;
  int cutoff = 10;
};

void validate(const SumSpec& s);

/// sum over every mode of the family with all indices in [1, cutoff] of
/// (e . phi(point))^2 / (lambda + mu)^2, summed in (lambda, family, m, n, p) order.
double family_sum_partial(const SumSpec& s);

/// Bound on the complete series of one family:
///   X0 Upsilon(b,c)/(pi^3 mu), Y0 Upsilon(a,c)/(pi^3 mu), Z0 Upsilon(a,b)/(pi^3 mu),
///   V Upsilon(b,c)/(pi^2 sqrt(mu)), W 2/(3 pi^2 sqrt(mu)) [pi a^2 + Upsilon(b,c)/2].
double family_sum_bound(Family family, const Direction& e, double mu);

/// Gamma(a,b,c) / (2 pi^3): the sum of the five family bounds at mu = 2.
double combined_sum_bound(const Direction& e);

}  // namespace stokes
