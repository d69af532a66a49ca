#include "stokes/gamma_opt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stokes/errors.hpp"
#include "stokes/integrals.hpp"

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;

}  // namespace

const GammaConstants& gamma_constants() noexcept {
  static const GammaConstants k = [] {
    const double k0 = 1.0 + 4.0 * std::numbers::sqrt2 * kPi / 3.0;
    const double k1 = 2.0 / 3.0 * std::numbers::sqrt2 * kPi * kPi;
    return GammaConstants{k0, k1, (kPi + 2.0) / 4.0 * k0};
  }();
  return k;
}

double gamma_unchecked(double a, double b, double c) noexcept {
  const auto& k = gamma_constants();
  return k.k0 * upsilon(b, c) + upsilon(a, c) + upsilon(a, b) + k.k1 * a * a;
}

double gamma(double a, double b, double c) {
  if (!(std::abs(a * a + b * b + c * c - 1.0) <= 1e-9))
    throw DomainError("gamma is maximised on the unit sphere; got a non-unit vector");
  return gamma_unchecked(a, b, c);
}

GProfile g_profile(double s) {
  if (!(s >= 0.0)) throw DomainError("G(s) is defined for s >= 0");
  const auto& k = gamma_constants();
  const double shift = k.k1 - k.k2 - kHalfPi;
  const double at = std::atan(s);
  const double num = 2.0 * (1.0 - s * s) * at + 2.0 * s + shift;
  const double den = 1.0 + 2.0 * s * s;
  const double dnum = -4.0 * s * at + 2.0 * (1.0 - s * s) / (1.0 + s * s) + 2.0;
  return {num / den, (dnum * den - num * 4.0 * s) / (den * den)};
}

double g_prime_display(double s) {
  if (!(s >= 0.0)) throw DomainError("G'(s) is defined for s >= 0");
  const auto& k = gamma_constants();
  const double shift = k.k1 - k.k2 - kHalfPi;
  const double den = 1.0 + 2.0 * s * s;
  return (1.0 - (s * s * s + s) * (3.0 * std::atan(s) + shift) - 2.0 * s * s * s * s) /
         (den * den * (1.0 + s * s));
}

int count_gprime_sign_changes(double lo, double hi, double step) {
  if (!(step > 0.0) || !(hi > lo)) throw DomainError("sign scan needs lo < hi and step > 0");
  const long count = std::lround(std::ceil((hi - lo) / step));
  int changes = 0;
  double prev = g_profile(lo).Gprime;
  for (long i = 1; i <= count; ++i) {
    const double s = std::min(hi, lo + i * step);
    const double cur = g_profile(s).Gprime;
    if ((prev > 0.0 && cur <= 0.0) || (prev < 0.0 && cur >= 0.0)) ++changes;
    if (cur != 0.0) prev = cur;
  }
  return changes;
}

double find_sigma(double tol) {
  if (!(tol >= 1e-14)) throw DomainError("find_sigma tolerance must be >= 1e-14");
  constexpr double kLo = 0.0, kHi = 10.0, kStep = 1e-2;
  const int steps = static_cast<int>(std::lround((kHi - kLo) / kStep));
  int changes = 0;
  double left = 0.0, right = 0.0;
  double prev_s = kLo;
  double prev = g_profile(kLo).Gprime;
  for (int i = 1; i <= steps; ++i) {
    const double s = kLo + i * kStep;
    const double cur = g_profile(s).Gprime;
    if ((prev > 0.0) != (cur > 0.0)) {
      ++changes;
      left = prev_s;
      right = s;
    }
    prev = cur;
    prev_s = s;
  }
  if (changes != 1)
    throw IntegrityError("G' must change sign exactly once on [0,10]; found " +
                         std::to_string(changes));
  double f_left = g_profile(left).Gprime;
  while (right - left > tol) {
    const double mid = 0.5 * (left + right);
    if (!(mid > left && mid < right)) break;
    const double f_mid = g_profile(mid).Gprime;
    if ((f_mid > 0.0) == (f_left > 0.0)) {
      left = mid;
      f_left = f_mid;
    } else {
      right = mid;
    }
  }
  return 0.5 * (left + right);
}

double gamma_max_closed() {
  const double sigma = find_sigma(1e-12);
  return g_profile(sigma).G + kHalfPi + gamma_constants().k2;
}

double gamma_restricted(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("gamma_restricted needs a in [0,1]");
  const auto& k = gamma_constants();
  const double b = std::sqrt((1.0 - a * a) / 2.0);
  return k.k0 * (1.0 + kHalfPi) * (1.0 - a * a) / 2.0 + 2.0 * upsilon(a, b) + k.k1 * a * a;
}

double s_of_a(double a) {
  if (!(a > 0.0 && a <= 1.0)) throw DomainError("s(a) is defined for a in (0,1]");
  return std::sqrt(1.0 - a * a) / (a * std::numbers::sqrt2);
}

double a_of_s(double s) {
  if (!(s >= 0.0)) throw DomainError("a(s) is defined for s >= 0");
  return 1.0 / std::sqrt(1.0 + 2.0 * s * s);
}

SphereMax gamma_max_oracle(const SphereSearchSpec& spec) {
  if (spec.grid_per_angle < 16) throw PreconditionError("grid_per_angle must be >= 16");
  if (spec.refine_rounds < 0) throw PreconditionError("refine_rounds must be >= 0");
  const int n = spec.grid_per_angle;

  double theta_lo = 0.0, theta_hi = kHalfPi, phi_lo = 0.0, phi_hi = kHalfPi;
  double best = -1.0, best_theta = 0.0, best_phi = 0.0;
  for (int round = 0; round <= spec.refine_rounds; ++round) {
    const double dt = (theta_hi - theta_lo) / (n - 1);
    const double dp = (phi_hi - phi_lo) / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double theta = i == n - 1 ? theta_hi : theta_lo + i * dt;
      const double st = std::sin(theta), ct = std::cos(theta);
      for (int j = 0; j < n; ++j) {
        const double phi = j == n - 1 ? phi_hi : phi_lo + j * dp;
        const double value = gamma_unchecked(ct, st * std::cos(phi), st * std::sin(phi));
        if (value > best) {
          best = value;
          best_theta = theta;
          best_phi = phi;
        }
      }
    }
    theta_lo = std::max(0.0, best_theta - dt);
    theta_hi = std::min(kHalfPi, best_theta + dt);
    phi_lo = std::max(0.0, best_phi - dp);
    phi_hi = std::min(kHalfPi, best_phi + dp);
  }
  const double st = std::sin(best_theta);
  return {best, std::cos(best_theta), st * std::cos(best_phi), st * std::sin(best_phi)};
}

}  // namespace stokes
