#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stokes/errors.hpp"
#include "stokes/quadrature.hpp"

using namespace stokes;
constexpr double pi = std::numbers::pi;

TEST_CASE("trapezoid weights") {
  const quad::Rule1D t = quad::trapezoid(0, pi, 5);
  REQUIRE(t.nodes.size() == 5);
  CHECK(t.nodes.front() == 0.0);
  CHECK(t.nodes.back() == pi);
  CHECK(t.weights[0] == doctest::Approx(pi / 8));
  CHECK(t.weights[2] == doctest::Approx(pi / 4));
}

TEST_CASE("Gauss-Legendre integrates polynomials of degree 2n-1 exactly") {
  for (int n : {1, 2, 5, 12, 30}) {
    const quad::Rule1D g = quad::gauss_legendre(-1, 2, n);
    double wsum = 0.0;
    for (double w : g.weights) wsum += w;
    CHECK(wsum == doctest::Approx(3.0).epsilon(1e-14));
    const int deg = 2 * n - 1;
    double v = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) v += g.weights[i] * std::pow(g.nodes[i], deg);
    const double exact = (std::pow(2.0, deg + 1) - std::pow(-1.0, deg + 1)) / (deg + 1);
    CHECK(v == doctest::Approx(exact).epsilon(1e-12));
  }
}

TEST_CASE("adaptive integration") {
  quad::AdaptiveSpec spec{1e-13, 1e-14, 2000};
  CHECK(quad::integrate([](double x) { return std::sin(x); }, 0, pi, spec).value ==
        doctest::Approx(2.0).epsilon(1e-14));
  // kink at 1/3 given as a break
  const double brk = 1.0 / 3;
  const auto res = quad::integrate([](double x) { return std::abs(x - 1.0 / 3); }, 0, 1, spec,
                                   std::span<const double>(&brk, 1));
  CHECK(res.value == doctest::Approx(5.0 / 18).epsilon(1e-14));
  CHECK(res.panels == 2);
  // endpoint singularity, open rule
  CHECK(quad::integrate([](double x) { return 1 / std::sqrt(x); }, 0, 1, {1e-10, 1e-12, 4000}).value ==
        doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("half line") {
  quad::AdaptiveSpec spec{1e-13, 1e-14, 2000};
  CHECK(quad::integrate_half_line([](double x) { return std::exp(-x); }, spec).value ==
        doctest::Approx(1.0).epsilon(1e-13));
  CHECK(quad::integrate_half_line([](double x) { return 1 / (1 + x * x); }, spec).value ==
        doctest::Approx(pi / 2).epsilon(1e-13));
}

TEST_CASE("panel budget exhaustion carries the estimate") {
  const auto nasty = [](double x) { return std::sin(1.0 / x) / x; };
  try {
    quad::integrate(nasty, 1e-4, 1, {1e-14, 0.0, 8});
    FAIL("expected AccuracyError");
  } catch (const AccuracyError& e) {
    CHECK(std::isfinite(e.estimate()));
    CHECK(e.error_estimate() > 1e-14);
  }
}
