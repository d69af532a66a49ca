#include <doctest.h>

#include <cmath>
#include <numbers>

#include "stokes/eigenbasis.hpp"
#include "stokes/errors.hpp"
#include "stokes/sampling.hpp"

using namespace stokes;
constexpr double pi = std::numbers::pi;

TEST_CASE("eigenvalues") {
  CHECK(eigenvalue(Mode::x0(1, 1)) == 2);
  CHECK(eigenvalue(Mode::w(1, 1, 1)) == 3);
  CHECK(eigenvalue(Mode::z0(2, 3)) == 13);
  CHECK(eigenvalue(Mode::y0(2, 5)) == 29);
  CHECK(eigenvalue(Mode::v(3, 1, 2)) == 14);
}

TEST_CASE("index patterns are validated") {
  CHECK_THROWS_AS(eigenvalue(Mode{Family::X0, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(eigenvalue(Mode{Family::Y0, 1, 1, 1}), DomainError);
  CHECK_THROWS_AS(eigenvalue(Mode{Family::Z0, 1, 0, 1}), DomainError);
  CHECK_THROWS_AS(eigenvalue(Mode::w(0, 1, 1)), DomainError);
  CHECK_THROWS_AS(eigenvalue(Mode::v(1, -1, 1)), DomainError);
  CHECK(is_valid(Mode::x0(3, 1)));
  CHECK_FALSE(is_valid(Mode::x0(0, 1)));
}

TEST_CASE("point evaluation") {
  const FieldValue a = evaluate(Mode::x0(1, 1), {0, pi / 2, 0});
  CHECK(a[0] == 0.0);
  CHECK(a[1] == doctest::Approx(0.253974543736963879).epsilon(1e-14));
  CHECK(std::abs(a[2]) < 1e-15);

  const FieldValue o = evaluate(Mode::x0(1, 1), {0, 0, 0});
  CHECK(std::abs(o[0]) + std::abs(o[1]) + std::abs(o[2]) < 1e-15);

  const FieldValue w = evaluate(Mode::w(1, 1, 1), {pi / 2, 0, 0});
  CHECK(w[0] == doctest::Approx(0.414738693207820446).epsilon(1e-14));
  CHECK(std::abs(w[1]) < 1e-15);
  CHECK(std::abs(w[2]) < 1e-15);

  CHECK_THROWS_AS(evaluate(Mode::w(1, 1, 1), {-0.1, 0, 0}), DomainError);
}

TEST_CASE("analytic divergence") {
  CHECK(std::abs(divergence(Mode::x0(2, 3), {0.4, 1.3, 2.9})) <= 1e-12);
  CHECK(std::abs(divergence(Mode::v(1, 2, 2), {1.0, 2.0, 0.5})) <= 1e-12);
  CHECK(std::abs(divergence(Mode::w(2, 1, 3), {0.3, 0.7, 2.1})) <= 1e-12);
}

TEST_CASE("jacobian agrees with central differences") {
  Sampler s(11, "unit.jacobian");
  const double h = 1e-6;
  for (Family f : kAllFamilies) {
    for (const ModeEntry& e : family_modes(f, 2)) {
      const Point3 x = s.interior_point(0.1);
      const auto jac = jacobian(e.mode, x);
      for (int axis = 0; axis < 3; ++axis) {
        Point3 lo = x, hi = x;
        (axis == 0 ? lo.x : axis == 1 ? lo.y : lo.z) -= h;
        (axis == 0 ? hi.x : axis == 1 ? hi.y : hi.z) += h;
        const FieldValue vl = evaluate(e.mode, lo), vh = evaluate(e.mode, hi);
        for (int c = 0; c < 3; ++c) CHECK(jac[c][axis] == doctest::Approx((vh[c] - vl[c]) / (2 * h)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("finite-difference residuals") {
  const FdResidual x0 = fd_residual(Mode::x0(1, 1), {1, 1, 1}, QuadSpec{16, QuadScheme::UniformTrapezoid, 1e-4});
  CHECK(x0.eigen_residual <= 1e-6);
  const FdResidual w = fd_residual(Mode::w(1, 1, 1), {1.5, 0.5, 0.5}, QuadSpec{16, QuadScheme::UniformTrapezoid, 1e-4});
  CHECK(w.div_residual <= 1e-6);
  const FdResidual y0 = fd_residual(Mode::y0(1, 1), {pi / 2, 1, pi / 2}, QuadSpec{16, QuadScheme::UniformTrapezoid, 1e-3});
  CHECK(y0.eigen_residual <= 1e-4);
  CHECK_THROWS_AS(fd_residual(Mode::w(1, 1, 1), {1e-4, 1, 1}, QuadSpec{}), DomainError);
}

TEST_CASE("enumeration goldens") {
  CHECK(enumerate_modes(1.5).empty());
  const auto two = enumerate_modes(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].mode == Mode::x0(1, 1));
  CHECK(two[1].mode == Mode::y0(1, 1));
  CHECK(two[2].mode == Mode::z0(1, 1));
  const auto three = enumerate_modes(3);
  REQUIRE(three.size() == 5);
  CHECK(three[3].mode == Mode::v(1, 1, 1));
  CHECK(three[4].mode == Mode::w(1, 1, 1));
  CHECK(enumerate_modes(5).size() == 11);
  CHECK(enumerate_modes(6).size() == 17);  // 2D families: 3 each; V, W: (1,1,1) and the (1,1,2) perms
}

TEST_CASE("enumeration is monotone and ordered") {
  const auto small = enumerate_modes(12);
  const auto large = enumerate_modes(30);
  REQUIRE(small.size() <= large.size());
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i].mode == large[i].mode);
  for (std::size_t i = 1; i < large.size(); ++i) CHECK(large[i - 1].eigenvalue <= large[i].eigenvalue);
  for (const ModeEntry& e : large) CHECK(e.eigenvalue >= 2);
}

TEST_CASE("family_modes covers the index box") {
  CHECK(family_modes(Family::X0, 3).size() == 9);
  CHECK(family_modes(Family::W, 3).size() == 27);
  CHECK(family_modes(Family::V, 1).size() == 1);
}

TEST_CASE("inner products") {
  const QuadSpec spec{};
  CHECK(inner_product(Mode::x0(1, 1), Mode::x0(1, 1), spec) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(inner_product(Mode::x0(1, 1), Mode::y0(1, 1), spec)) <= 1e-10);
  CHECK(std::abs(inner_product(Mode::w(1, 1, 1), Mode::v(1, 1, 1), spec)) <= 1e-10);
  CHECK_THROWS_AS(inner_product(Mode::w(4, 1, 1), Mode::w(4, 1, 1), QuadSpec{9}), PreconditionError);
  CHECK_NOTHROW(inner_product(Mode::w(4, 1, 1), Mode::w(4, 1, 1), QuadSpec{10}));
}

TEST_CASE("Gauss and trapezoid rules give the same Gram entries") {
  const QuadSpec gauss{16, QuadScheme::Gauss};
  CHECK(inner_product(Mode::w(2, 1, 3), Mode::w(2, 1, 3), gauss) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(inner_product(Mode::w(2, 1, 3), Mode::v(2, 1, 3), gauss)) <= 1e-12);
}

TEST_CASE("Gram matrix up to lambda 20 is the identity") {
  std::vector<Mode> modes;
  for (const ModeEntry& e : enumerate_modes(20)) modes.push_back(e.mode);
  const auto g = gram_matrix(modes, QuadSpec{});
  const std::size_t n = modes.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(g[i * n + j] - (i == j)));
  CHECK(worst <= 1e-9);
}

TEST_CASE("gradient pairing is diag(lambda)") {
  const QuadSpec spec{};
  CHECK(gradient_inner_product(Mode::w(1, 2, 1), Mode::w(1, 2, 1), spec) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(std::abs(gradient_inner_product(Mode::w(1, 2, 1), Mode::v(1, 2, 1), spec)) <= 1e-12);
}

TEST_CASE("factorisation of V and W") {
  CHECK(factorization_residual(Mode::v(1, 1, 1), {0.4, 1.1, 2.2}) <= 1e-12);
  CHECK(factorization_residual(Mode::w(2, 1, 1), {1.0, 1.0, 1.0}) <= 1e-12);
  CHECK(factorization_residual(Mode::v(3, 2, 1), {pi, 0.5, 0.5}) <= 1e-12);
  CHECK_THROWS_AS(factorization_residual(Mode::x0(1, 1), {1, 1, 1}), DomainError);

  Sampler s(3, "unit.factorization");
  double worst = 0.0;
  for (Family f : {Family::V, Family::W})
    for (const ModeEntry& e : family_modes(f, 3))
      for (int i = 0; i < 40; ++i) worst = std::max(worst, factorization_residual(e.mode, s.interior_point(0.0)));
  CHECK(worst <= 1e-12);
}

TEST_CASE("boundary conditions on the faces") {
  Sampler s(5, "unit.faces");
  for (Family f : kAllFamilies) {
    for (const ModeEntry& e : family_modes(f, 3)) {
      Point3 p = s.interior_point(0.0);
      for (double face : {0.0, pi}) {
        Point3 q = p;
        q.x = face;
        CHECK(std::abs(evaluate(e.mode, q)[0]) <= 1e-12);
        const auto jac = jacobian(e.mode, q);
        CHECK(std::abs(jac[1][0]) <= 1e-12);
        CHECK(std::abs(jac[2][0]) <= 1e-12);
        q = p;
        q.z = face;
        CHECK(std::abs(evaluate(e.mode, q)[2]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("separable form reproduces evaluate") {
  Sampler s(9, "unit.separable");
  for (Family f : kAllFamilies) {
    for (const ModeEntry& e : family_modes(f, 2)) {
      const SeparableField sf = separable_form(e.mode);
      const Point3 x = s.interior_point(0.0);
      const FieldValue v = evaluate(e.mode, x);
      for (int c = 0; c < 3; ++c) {
        double t = sf.component[c].amp;
        for (int a = 0; a < 3; ++a) {
          const double arg = sf.wavenumber[a] * x[a];
          t *= sf.component[c].trig[a] == Trig::Sin ? std::sin(arg) : std::cos(arg);
        }
        CHECK(t == doctest::Approx(v[c]).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : kAllFamilies) CHECK(family_from_string(to_string(f)) == f);
  CHECK_THROWS_AS(family_from_string("Q"), DomainError);
}
