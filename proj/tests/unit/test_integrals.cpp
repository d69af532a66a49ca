#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stokes/errors.hpp"
#include "stokes/gamma_opt.hpp"
#include "stokes/integrals.hpp"
#include "stokes/sampling.hpp"

using namespace stokes;
constexpr double pi = std::numbers::pi;
const double pi3 = pi * pi * pi;
const double r = std::sqrt(0.5);

TEST_CASE("upsilon values") {
  CHECK(upsilon(r, r) == doctest::Approx(0.5 + pi / 4).epsilon(1e-15));
  CHECK(upsilon(0.7, 0.0) == 0.0);
  CHECK(upsilon(0.0, 0.0) == 0.0);
  // 0.36 atan(4/3) + 0.64 atan(3/4) + 0.48
  CHECK(upsilon(0.6, 0.8) == doctest::Approx(1.22566698810828241).epsilon(1e-14));
}

TEST_CASE("upsilon symmetry, evenness and diagonal") {
  Sampler s(2, "unit.upsilon");
  for (int i = 0; i < 1000; ++i) {
    const double b = s.uniform(-1, 1), c = s.uniform(-1, 1);
    CHECK(std::abs(upsilon(b, c) - upsilon(c, b)) <= 1e-15);
    CHECK(upsilon(-b, c) == upsilon(b, c));
    CHECK(upsilon(b, c) >= 0.0);
  }
  for (int i = 0; i <= 100; ++i) {
    const double b = i / 100.0;
    CHECK(std::abs(upsilon(b, b) - (1 + pi / 2) * b * b) <= 1e-14);
  }
}

TEST_CASE("upsilon_b against central differences") {
  Sampler s(4, "unit.upsilon_b");
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double b = s.uniform(0.05, 1), c = s.uniform(0.05, 1);
    const double fd = (upsilon(b + h, c) - upsilon(b - h, c)) / (2 * h);
    CHECK(std::abs(fd - upsilon_db(b, c)) <= 1e-6);
    CHECK(upsilon_db(b, c) >= 0.0);
  }
  CHECK_THROWS_AS(upsilon_db(0.0, 0.5), DomainError);
}

TEST_CASE("exact angular integral") {
  // 0.36 atan(3/4) + 0.64 atan(4/3) + 0.48
  CHECK(angular_integral_exact(0.6, 0.8) == doctest::Approx(1.30512933868661421).epsilon(1e-14));
  CHECK(angular_integral_exact(0.7, 0.0) == doctest::Approx(0.49 * pi / 2).epsilon(1e-15));
  CHECK(angular_integral_exact(r, r) == doctest::Approx(upsilon(r, r)).epsilon(1e-15));
}

TEST_CASE("closed forms") {
  CHECK(closed_integral({IntegralKind::I1, 0, r, r, 1.0}) == doctest::Approx(0.321349540849362077).epsilon(1e-14));
  CHECK(closed_integral({IntegralKind::I2, 0, r, r, 4.0}) == doctest::Approx(0.252387339191702267).epsilon(1e-14));
  CHECK(closed_integral({IntegralKind::I3, 1, 0, 0, 1.0}) == doctest::Approx(0.822467033424113218).epsilon(1e-14));
  CHECK_THROWS_AS(closed_integral({IntegralKind::I1, 0, 0.9, 0.9, 1.0}), DomainError);
  CHECK_THROWS_AS(closed_integral({IntegralKind::I1, 0, 0.5, 0.5, 0.0}), DomainError);
}

TEST_CASE("quadrature oracles on the diagonal fixtures") {
  CHECK(std::abs(quad_integral({IntegralKind::Angular, 0, r, r, 1}) - (0.5 + pi / 4)) <= 1e-10);
  CHECK(std::abs(quad_integral({IntegralKind::I1, 0, r, r, 1}) - 0.321349540849362077) <= 1e-8);
  CHECK(std::abs(quad_integral({IntegralKind::I2, 0, r, r, 4}, 1e-9) - 0.252387339191702267) <= 1e-6);
  const double i3 = quad_integral({IntegralKind::I3, 1, 0, 0, 1}, 1e-9);
  CHECK(i3 <= 0.822467033424113218 + 1e-8);
}

TEST_CASE("quadrature agrees with the exact angular form off the diagonal") {
  CHECK(quad_integral({IntegralKind::Angular, 0, 0.6, 0.8, 1}) ==
        doctest::Approx(1.30512933868661421).epsilon(1e-12));
  const double j = angular_integral_exact(0.6, 0.8);
  CHECK(quad_integral({IntegralKind::I1, 0, 0.6, 0.8, 2.0}, 1e-12) ==
        doctest::Approx(j / 8.0).epsilon(1e-9));
  CHECK(quad_integral({IntegralKind::I2, 0, 0.6, 0.8, 2.0}, 1e-11) ==
        doctest::Approx(pi * j / (8 * std::sqrt(2.0))).epsilon(1e-8));
}

TEST_CASE("I3 equals its bound when a or the side term vanishes") {
  // a = 0: only the side terms remain and the inequality becomes equality.
  const double j = angular_integral_exact(0.6, 0.8);
  CHECK(quad_integral({IntegralKind::I3, 0, 0.6, 0.8, 1.0}, 1e-10) ==
        doctest::Approx(pi / 12 * j / 2).epsilon(1e-8));
}

TEST_CASE("family sums") {
  const Direction ey{0, 1, 0};
  CHECK(family_sum_partial({Family::X0, ey, {0, pi / 2, 0}, 1.0, 1}) ==
        doctest::Approx(0.00716700765182210871).epsilon(1e-13));
  CHECK(family_sum_partial({Family::X0, Direction::normalized(1, 2, 3), {0, 0, 0}, 1.0, 10}) == 0.0);
  const Direction diag{0, r, r};
  const double partial = family_sum_partial({Family::V, diag, {0.7, 1.1, 2.3}, 2.0, 20});
  CHECK(partial > 0.0);
  CHECK(partial <= family_sum_bound(Family::V, diag, 2.0));
  CHECK_THROWS_AS(family_sum_partial({Family::X0, ey, {0, 0, 0}, 1.0, 0}), DomainError);
}

TEST_CASE("partial sums grow with the cutoff") {
  const Direction d = Direction::normalized(0.2, -0.4, 0.9);
  const Point3 x{0.3, 1.7, 2.2};
  for (Family f : kAllFamilies) {
    double prev = 0.0;
    for (int cutoff : {1, 2, 5, 10, 20}) {
      const double v = family_sum_partial({f, d, x, 1.0, cutoff});
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("family bounds") {
  CHECK(family_sum_bound(Family::X0, {0, r, r}, 1.0) == doctest::Approx(0.0414560631271841875).epsilon(1e-14));
  CHECK(family_sum_bound(Family::X0, {1, 0, 0}, 3.0) == 0.0);
  CHECK(family_sum_bound(Family::W, {1, 0, 0}, 1.0) == doctest::Approx(0.212206590789193781).epsilon(1e-14));
}

TEST_CASE("combined bound") {
  CHECK(combined_sum_bound({1, 0, 0}) == doctest::Approx(0.150052719359517678).epsilon(1e-14));
  CHECK(combined_sum_bound({0, 1, 0}) == 0.0);
  CHECK(combined_sum_bound({0, r, r}) == doctest::Approx(0.143517655264247288).epsilon(1e-13));
  Sampler s(8, "unit.combination");
  for (int i = 0; i < 100; ++i) {
    const Direction e = s.direction();
    double total = 0.0;
    for (Family f : kAllFamilies) total += family_sum_bound(f, e, 2.0);
    CHECK(std::abs(total - combined_sum_bound(e)) <= 1e-12);
  }
}
