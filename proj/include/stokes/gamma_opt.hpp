#pragma once

// Maximisation of
//   Gamma(a,b,c) = k0 Upsilon(b,c) + Upsilon(a,c) + Upsilon(a,b) + k1 a^2
// on the unit sphere: reduction to the one-variable profile G(s), its unique
// critical point sigma, and an independent spherical grid search.

namespace stokes {

struct GammaConstants {
  double k0;  // 1 + 4 sqrt(2) pi / 3
  double k1;  // (2/3) sqrt(2) pi^2
  double k2;  // (pi + 2) / 4 * k0
};

const GammaConstants& gamma_constants() noexcept;

/// Gamma for a unit vector (checked to 1e-9); even in every component.
double gamma(double a, double b, double c);

/// Gamma without the unit-sphere check.
double gamma_unchecked(double a, double b, double c) noexcept;

struct GProfile {
  double G = 0.0;
  double Gprime = 0.0;
};

/// G(s) = (2(1-s^2) atan s + 2s + k1 - k2 - pi/2) / (1 + 2s^2) and its exact
/// derivative. Throws DomainError for s < 0.
GProfile g_profile(double s);

/// (1 - (s^3+s)(3 atan s + k1 - k2 - pi/2) - 2s^4) / ((1+2s^2)^2 (1+s^2)).
/// This expression is a quarter of the derivative of G; it has the same sign
/// and the same zero.
double g_prime_display(double s);

/// Number of sign changes of G' between consecutive samples of [lo, hi].
int count_gprime_sign_changes(double lo, double hi, double step);

/// Root of G' on [0, 10]: sign scan with step 1e-2, then bisection to `tol`.
/// Throws IntegrityError unless exactly one sign change is found, DomainError
/// for tol < 1e-14.
double find_sigma(double tol = 1e-12);

/// G(sigma) + pi/2 + k2.
double gamma_max_closed();

/// Lambda(a) = k0 (1 + pi/2)(1 - a^2)/2 + 2 Upsilon(a, sqrt(1-a^2)/sqrt 2) + k1 a^2,
/// i.e. Gamma restricted to b = c >= 0. Throws DomainError outside [0,1].
double gamma_restricted(double a);

/// s(a) = sqrt(1-a^2) / (a sqrt 2) for a in (0, 1].
double s_of_a(double a);

/// Inverse of s_of_a: a = 1 / sqrt(1 + 2 s^2).
double a_of_s(double s);

struct SphereSearchSpec {
  int grid_per_angle = 256;
  int refine_rounds = 3;
};

struct SphereMax {
  double value = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Maximum of Gamma over a (theta, phi) grid of the closed first octant,
/// a = cos theta, b = sin theta cos phi, c = sin theta sin phi, followed by
/// refine_rounds zooms around the incumbent. Ties keep the lexicographically
/// smallest (theta, phi). Throws PreconditionError for grid_per_angle < 16.
SphereMax gamma_max_oracle(const SphereSearchSpec& spec);

}  // namespace stokes
