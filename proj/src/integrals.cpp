#include "stokes/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "stokes/errors.hpp"
#include "stokes/gamma_opt.hpp"

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;
const double kPi2 = kPi * kPi;
const double kPi3 = kPi2 * kPi;

double sq(double v) { return v * v; }

// t^2 * atan|num/den| with atan(+inf) = pi/2 and the product 0 when t = 0.
double weighted_atan(double t, double num, double den) {
  if (t == 0.0) return 0.0;
  if (den == 0.0) return t * t * (num == 0.0 ? 0.0 : kPi / 2);
  return t * t * std::atan(std::abs(num / den));
}

}  // namespace

double upsilon(double b, double c) {
  return weighted_atan(b, c, b) + weighted_atan(c, b, c) + std::abs(b * c);
}

double upsilon_db(double b, double c) {
  if (!(b > 0.0) || c < 0.0) throw DomainError("upsilon_db requires b > 0 and c >= 0");
  return 2.0 * c * c * c / (b * b + c * c) + 2.0 * b * std::atan(c / b);
}

double angular_integral_exact(double b, double c) {
  return weighted_atan(b, b, c) + weighted_atan(c, c, b) + std::abs(b * c);
}

const char* to_string(IntegralKind kind) noexcept {
  switch (kind) {
    case IntegralKind::Angular: return "angular";
    case IntegralKind::I1: return "I1";
    case IntegralKind::I2: return "I2";
    case IntegralKind::I3: return "I3";
  }
  return "?";
}

void validate(const IntegralQuery& q) {
  if (!(q.mu > 0.0) || !std::isfinite(q.mu)) throw DomainError("mu must be positive");
  const double a2 = q.kind == IntegralKind::I3 ? q.a * q.a : 0.0;
  if (!(a2 + q.b * q.b + q.c * q.c <= 1.0 + 1e-12))
    throw DomainError("integral parameters must satisfy a^2 + b^2 + c^2 <= 1");
}

double closed_integral(const IntegralQuery& q) {
  validate(q);
  const double u = upsilon(q.b, q.c);
  switch (q.kind) {
    case IntegralKind::Angular: return u;
    case IntegralKind::I1: return u / (4.0 * q.mu);
    case IntegralKind::I2: return kPi * u / (8.0 * std::sqrt(q.mu));
    case IntegralKind::I3: return kPi / (12.0 * std::sqrt(q.mu)) * (kPi * q.a * q.a + u / 2.0);
  }
  return 0.0;
}

namespace {

// Inner integrals aim at a relative target; their errors are far below the
// outer absolute target for every integrand here (all are nonnegative).
const quad::AdaptiveSpec kInner{0.0, 1e-13, 4000};

double kink(double num, double den) { return den == 0.0 ? -1.0 : num / den; }

// int_0^inf dx max{b^2 y^2, c^2 x^2} / ((x^2+y^2)(x^2+y^2+mu)^2)
double i1_inner(double b, double c, double y, double mu) {
  const double by2 = sq(b * y);
  const double split = kink(std::abs(b) * y, std::abs(c));
  const auto f = [&](double x) {
    const double r2 = x * x + y * y;
    return std::max(by2, sq(c * x)) / (r2 * sq(r2 + mu));
  };
  return quad::integrate_half_line(f, kInner, std::span<const double>(&split, 1)).value;
}

double i1(double b, double c, double mu, const quad::AdaptiveSpec& outer) {
  const auto g = [&](double y) { return i1_inner(b, c, y, mu); };
  return quad::integrate_half_line(g, outer).value;
}

double i2(double b, double c, double mu, const quad::AdaptiveSpec& outer, const quad::AdaptiveSpec& mid) {
  const auto h = [&](double z) {
    const double shifted = mu + z * z;
    const auto g = [&](double y) { return i1_inner(b, c, y, shifted); };
    return quad::integrate_half_line(g, mid).value;
  };
  return quad::integrate_half_line(h, outer).value;
}

double i3(double a, double b, double c, double mu, const quad::AdaptiveSpec& outer,
          const quad::AdaptiveSpec& mid) {
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  const auto h = [&](double y) {
    const auto g = [&](double z) {
      const double t2 = y * y + z * z;
      const double lead = a2 * t2 * t2;
      const double side = std::max(b2 * y * y, c2 * z * z);
      const double split = side > 0.0 ? std::abs(a) * t2 / std::sqrt(side) : -1.0;
      const auto f = [&](double x) {
        const double r2 = x * x + t2;
        return std::max(lead, side * x * x) / (t2 * r2 * sq(r2 + mu));
      };
      return quad::integrate_half_line(f, kInner, std::span<const double>(&split, 1)).value;
    };
    const double split = kink(std::abs(b) * y, std::abs(c));
    return quad::integrate_half_line(g, mid, std::span<const double>(&split, 1)).value;
  };
  return quad::integrate_half_line(h, outer).value;
}

}  // namespace

double quad_integral(const IntegralQuery& q, double tol) {
  validate(q);
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  const quad::AdaptiveSpec outer{tol, 1e-13, 4000};
  const quad::AdaptiveSpec mid{0.0, 1e-13, 4000};
  switch (q.kind) {
    case IntegralKind::Angular: {
      const double b2 = q.b * q.b, c2 = q.c * q.c;
      const auto f = [&](double t) {
        const double cs = std::cos(t), sn = std::sin(t);
        return 2.0 * std::max(b2 * cs * cs, c2 * sn * sn);
      };
      const double split = std::atan2(std::abs(q.b), std::abs(q.c));
      return quad::integrate(f, 0.0, kPi / 2, outer, std::span<const double>(&split, 1)).value;
    }
    case IntegralKind::I1: return i1(q.b, q.c, q.mu, outer);
    case IntegralKind::I2: return i2(q.b, q.c, q.mu, outer, mid);
    case IntegralKind::I3: return i3(q.a, q.b, q.c, q.mu, outer, mid);
  }
  return 0.0;
}

void validate(const SumSpec& s) {
  validate(s.e);
  validate(s.point);
  if (!(s.mu > 0.0)) throw DomainError("mu must be positive");
  if (s.cutoff < 1) throw DomainError("cutoff must be >= 1");
}

double family_sum_partial(const SumSpec& s) {
  validate(s);
  double total = 0.0;
  for (const ModeEntry& entry : family_modes(s.family, s.cutoff)) {
    const FieldValue v = evaluate(entry.mode, s.point);
    const double proj = s.e.a * v[0] + s.e.b * v[1] + s.e.c * v[2];
    total += sq(proj) / sq(entry.eigenvalue + s.mu);
  }
  return total;
}

double family_sum_bound(Family family, const Direction& e, double mu) {
  validate(e);
  if (!(mu > 0.0)) throw DomainError("mu must be positive");
  switch (family) {
    case Family::X0: return upsilon(e.b, e.c) / (kPi3 * mu);
    case Family::Y0: return upsilon(e.a, e.c) / (kPi3 * mu);
    case Family::Z0: return upsilon(e.a, e.b) / (kPi3 * mu);
    case Family::V: return upsilon(e.b, e.c) / (kPi2 * std::sqrt(mu));
    case Family::W:
      return 2.0 / (3.0 * kPi2 * std::sqrt(mu)) * (kPi * e.a * e.a + upsilon(e.b, e.c) / 2.0);
  }
  return 0.0;
}

double combined_sum_bound(const Direction& e) {
  validate(e);
  return gamma(e.a, e.b, e.c) / (2.0 * kPi3);
}

}  // namespace stokes
