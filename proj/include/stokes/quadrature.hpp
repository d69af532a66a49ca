#pragma once

#include <functional>
#include <span>
#include <vector>

#include "stokes/eigenbasis.hpp"

namespace stokes::quad {

/// Nodes and weights of a 1D rule on [lo, hi].
struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Composite trapezoid with `count` equispaced nodes (endpoints included).
Rule1D trapezoid(double lo, double hi, int count);

/// Gauss-Legendre with `count` nodes, computed by Newton iteration on P_count.
Rule1D gauss_legendre(double lo, double hi, int count);

Rule1D make_rule(QuadScheme scheme, double lo, double hi, int count);

struct AdaptiveSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_panels = 2000;
};

struct AdaptiveResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) on [lo, hi]. `breaks` are interior
/// points where the integrand has a kink; they become initial panel edges.
/// The rule is open, so the endpoints are never evaluated.
/// Throws AccuracyError carrying the achieved estimate when max_panels is hit.
AdaptiveResult integrate(const Integrand& f, double lo, double hi, const AdaptiveSpec& spec,
                         std::span<const double> breaks = {});

/// Integral over [0, inf) via t = u / (1 - u) and adaptive integration in u.
/// `breaks` are given in t.
AdaptiveResult integrate_half_line(const Integrand& f, const AdaptiveSpec& spec,
                                   std::span<const double> breaks = {});

}  // namespace stokes::quad
