#include "stokes/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "stokes/errors.hpp"

namespace stokes::quad {

Rule1D trapezoid(double lo, double hi, int count) {
  if (count < 2) throw PreconditionError("trapezoid rule needs at least 2 nodes");
  Rule1D r;
  r.nodes.resize(count);
  r.weights.assign(count, (hi - lo) / (count - 1));
  for (int i = 0; i < count; ++i) r.nodes[i] = lo + (hi - lo) * i / (count - 1);
  r.weights.front() *= 0.5;
  r.weights.back() *= 0.5;
  return r;
}

Rule1D gauss_legendre(double lo, double hi, int count) {
  if (count < 1) throw PreconditionError("Gauss-Legendre rule needs at least 1 node");
  Rule1D r;
  r.nodes.resize(count);
  r.weights.resize(count);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < (count + 1) / 2; ++i) {
    // Tricomi initial guess, then Newton on P_count.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= count; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = mid - half * x;
    r.nodes[count - 1 - i] = mid + half * x;
    r.weights[i] = half * w;
    r.weights[count - 1 - i] = half * w;
  }
  return r;
}

Rule1D make_rule(QuadScheme scheme, double lo, double hi, int count) {
  return scheme == QuadScheme::Gauss ? gauss_legendre(lo, hi, count) : trapezoid(lo, hi, count);
}

namespace {

constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo, hi, value, error;
  bool operator<(const Panel& other) const {
    if (error != other.error) return error < other.error;
    return lo > other.lo;
  }
};

Panel kronrod15(const Integrand& f, double lo, double hi) {
  const double centre = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(centre);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  double fv[15];
  fv[7] = fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    fv[j] = f1;
    fv[14 - j] = f2;
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  // QUADPACK error heuristic.
  const double mean = 0.5 * kron;
  double resasc = kWgk[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  resasc *= half;
  double err = std::abs((kron - gauss) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  return {lo, hi, kron * half, err};
}

}  // namespace

AdaptiveResult integrate(const Integrand& f, double lo, double hi, const AdaptiveSpec& spec,
                         std::span<const double> breaks) {
  std::vector<double> edges{lo};
  for (double b : breaks)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Panel> heap;
  double value = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = kronrod15(f, edges[i], edges[i + 1]);
    value += p.value;
    error += p.error;
    heap.push(p);
  }
  int panels = static_cast<int>(heap.size());
  const auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(value)); };

  while (error > target()) {
    if (panels >= spec.max_panels)
      throw AccuracyError("adaptive quadrature exhausted its panel budget", value, error);
    const Panel worst = heap.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) break;  // panel at floating-point resolution
    heap.pop();
    const Panel left = kronrod15(f, worst.lo, mid);
    const Panel right = kronrod15(f, mid, worst.hi);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }

  // Re-sum in a fixed left-to-right order so the result does not depend on the
  // history of incremental updates.
  std::vector<Panel> all;
  all.reserve(heap.size());
  while (!heap.empty()) {
    all.push_back(heap.top());
    heap.pop();
  }
  std::sort(all.begin(), all.end(), [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
  AdaptiveResult r;
  for (const Panel& p : all) {
    r.value += p.value;
    r.error += p.error;
  }
  r.panels = panels;
  return r;
}

AdaptiveResult integrate_half_line(const Integrand& f, const AdaptiveSpec& spec,
                                   std::span<const double> breaks) {
  std::vector<double> ubreaks;
  for (double t : breaks)
    if (t > 0.0 && std::isfinite(t)) ubreaks.push_back(t / (1.0 + t));
  const Integrand g = [&f](double u) {
    const double w = 1.0 - u;
    return f(u / w) / (w * w);
  };
  return integrate(g, 0.0, 1.0, spec, ubreaks);
}

}  // namespace stokes::quad
