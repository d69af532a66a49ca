#include "stokes/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include "stokes/errors.hpp"
#include "stokes/kernels.hpp"
#include "stokes/quadrature.hpp"

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;
const double kPi3 = kPi * kPi * kPi;

double trig(Trig t, double arg) { return t == Trig::Sin ? std::sin(arg) : std::cos(arg); }

// d/ds of t(k s) evaluated at s: returns the derivative's trig kind and factor.
std::pair<Trig, double> derivative(Trig t, int k) {
  return t == Trig::Sin ? std::pair{Trig::Cos, static_cast<double>(k)}
                        : std::pair{Trig::Sin, -static_cast<double>(k)};
}

int family_rank(Family f) { return static_cast<int>(f); }

bool mode_less(const ModeEntry& l, const ModeEntry& r) {
  if (l.eigenvalue != r.eigenvalue) return l.eigenvalue < r.eigenvalue;
  if (l.mode.family != r.mode.family) return family_rank(l.mode.family) < family_rank(r.mode.family);
  if (l.mode.m != r.mode.m) return l.mode.m < r.mode.m;
  if (l.mode.n != r.mode.n) return l.mode.n < r.mode.n;
  return l.mode.p < r.mode.p;
}

}  // namespace

const char* to_string(Family f) noexcept {
  switch (f) {
    case Family::X0: return "X0";
    case Family::Y0: return "Y0";
    case Family::Z0: return "Z0";
    case Family::V: return "V";
    case Family::W: return "W";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : kAllFamilies)
    if (name == to_string(f)) return f;
  throw DomainError("unknown eigenfunction family '" + name + "'");
}

std::string to_string(const Mode& mode) {
  std::ostringstream os;
  os << to_string(mode.family) << '(' << mode.m << ',' << mode.n << ',' << mode.p << ')';
  return os.str();
}

bool is_valid(const Mode& mode) noexcept {
  const auto pos = [](int v) { return v >= 1; };
  switch (mode.family) {
    case Family::X0: return mode.m == 0 && pos(mode.n) && pos(mode.p);
    case Family::Y0: return mode.n == 0 && pos(mode.m) && pos(mode.p);
    case Family::Z0: return mode.p == 0 && pos(mode.m) && pos(mode.n);
    case Family::V:
    case Family::W: return pos(mode.m) && pos(mode.n) && pos(mode.p);
  }
  return false;
}

void validate(const Mode& mode) {
  if (!is_valid(mode)) throw DomainError("invalid index pattern for mode " + to_string(mode));
}

void validate(const Point3& point) {
  for (int a = 0; a < 3; ++a) {
    const double v = point[a];
    if (!(v >= 0.0 && v <= kPi)) throw DomainError("point outside the closed cube [0,pi]^3");
  }
}

void validate(const QuadSpec& spec) {
  if (spec.nodes_per_axis < 2) throw PreconditionError("nodes_per_axis must be >= 2");
  if (!(spec.fd_step > 0.0 && spec.fd_step <= 0.01))
    throw PreconditionError("fd_step must lie in (0, 0.01]");
}

int eigenvalue(const Mode& mode) {
  validate(mode);
  return mode.m * mode.m + mode.n * mode.n + mode.p * mode.p;
}

int max_wavenumber(const Mode& mode) noexcept { return std::max({mode.m, mode.n, mode.p}); }

SeparableField separable_form(const Mode& mode) {
  validate(mode);
  const double m = mode.m, n = mode.n, p = mode.p;
  constexpr auto S = Trig::Sin;
  constexpr auto C = Trig::Cos;
  SeparableField f;
  f.wavenumber = {mode.m, mode.n, mode.p};
  switch (mode.family) {
    case Family::X0: {
      const double pref = 2.0 / std::sqrt(kPi3 * (n * n + p * p));
      f.component[1] = {pref * p, {C, S, C}};
      f.component[2] = {-pref * n, {C, C, S}};
      break;
    }
    case Family::Y0: {
      const double pref = 2.0 / std::sqrt(kPi3 * (m * m + p * p));
      f.component[0] = {-pref * p, {S, C, C}};
      f.component[2] = {pref * m, {C, C, S}};
      break;
    }
    case Family::Z0: {
      const double pref = 2.0 / std::sqrt(kPi3 * (m * m + n * n));
      f.component[0] = {pref * n, {S, C, C}};
      f.component[1] = {-pref * m, {C, S, C}};
      break;
    }
    case Family::V: {
      const double pref = 2.0 * std::numbers::sqrt2 / std::sqrt(kPi3 * (n * n + p * p));
      f.component[1] = {pref * p, {C, S, C}};
      f.component[2] = {-pref * n, {C, C, S}};
      break;
    }
    case Family::W: {
      const double np2 = n * n + p * p;
      const double pref =
          2.0 * std::numbers::sqrt2 / std::sqrt(kPi3 * (m * m + n * n + p * p) * np2);
      f.component[0] = {pref * np2, {S, C, C}};
      f.component[1] = {-pref * m * n, {C, S, C}};
      f.component[2] = {-pref * m * p, {C, C, S}};
      break;
    }
  }
  return f;
}

FieldValue evaluate(const Mode& mode, const Point3& point) {
  validate(point);
  const SeparableField f = separable_form(mode);
  FieldValue out{};
  for (int c = 0; c < 3; ++c) {
    const SeparableTerm& t = f.component[c];
    if (t.amp == 0.0) continue;
    double v = t.amp;
    for (int a = 0; a < 3; ++a) v *= trig(t.trig[a], f.wavenumber[a] * point[a]);
    out[c] = v;
  }
  return out;
}

std::array<FieldValue, 3> jacobian(const Mode& mode, const Point3& point) {
  const SeparableField f = separable_form(mode);
  std::array<FieldValue, 3> jac{};
  for (int c = 0; c < 3; ++c) {
    const SeparableTerm& t = f.component[c];
    if (t.amp == 0.0) continue;
    for (int d = 0; d < 3; ++d) {
      double v = t.amp;
      for (int a = 0; a < 3; ++a) {
        if (a == d) {
          const auto [kind, factor] = derivative(t.trig[a], f.wavenumber[a]);
          v *= factor * trig(kind, f.wavenumber[a] * point[a]);
        } else {
          v *= trig(t.trig[a], f.wavenumber[a] * point[a]);
        }
      }
      jac[c][d] = v;
    }
  }
  return jac;
}

double divergence(const Mode& mode, const Point3& point) {
  const auto jac = jacobian(mode, point);
  return jac[0][0] + jac[1][1] + jac[2][2];
}

FdResidual fd_residual(const Mode& mode, const Point3& point, const QuadSpec& spec) {
  validate(spec);
  const double h = spec.fd_step;
  for (int a = 0; a < 3; ++a) {
    if (point[a] < 2.0 * h || point[a] > kPi - 2.0 * h)
      throw DomainError("finite-difference stencil needs distance >= 2*fd_step from the boundary");
  }
  const double lambda = eigenvalue(mode);
  const FieldValue centre = evaluate(mode, point);

  const auto shifted = [&](int axis, double delta) {
    Point3 q = point;
    (axis == 0 ? q.x : axis == 1 ? q.y : q.z) += delta;
    return evaluate(mode, q);
  };

  FieldValue laplacian{};
  double div = 0.0;
  for (int a = 0; a < 3; ++a) {
    const FieldValue plus = shifted(a, h);
    const FieldValue minus = shifted(a, -h);
    for (int c = 0; c < 3; ++c) laplacian[c] += (plus[c] - 2.0 * centre[c] + minus[c]) / (h * h);
    div += (plus[a] - minus[a]) / (2.0 * h);
  }

  FdResidual r;
  for (int c = 0; c < 3; ++c)
    r.eigen_residual = std::max(r.eigen_residual, std::abs(-laplacian[c] - lambda * centre[c]));
  r.div_residual = std::abs(div);
  return r;
}

std::vector<ModeEntry> family_modes(Family family, int cutoff) {
  std::vector<ModeEntry> out;
  if (cutoff < 1) return out;
  for (int i = 1; i <= cutoff; ++i) {
    for (int j = 1; j <= cutoff; ++j) {
      switch (family) {
        case Family::X0: out.push_back({Mode::x0(i, j), 0}); break;
        case Family::Y0: out.push_back({Mode::y0(i, j), 0}); break;
        case Family::Z0: out.push_back({Mode::z0(i, j), 0}); break;
        case Family::V:
        case Family::W:
          for (int k = 1; k <= cutoff; ++k)
            out.push_back({{family, i, j, k}, 0});
          break;
      }
    }
  }
  for (ModeEntry& e : out) e.eigenvalue = eigenvalue(e.mode);
  std::sort(out.begin(), out.end(), mode_less);
  return out;
}

std::vector<ModeEntry> enumerate_modes(double lambda_max) {
  std::vector<ModeEntry> out;
  if (!(lambda_max >= 2.0)) return out;
  const int k_max = static_cast<int>(std::floor(std::sqrt(lambda_max)));
  for (Family f : kAllFamilies) {
    for (const ModeEntry& e : family_modes(f, k_max))
      if (e.eigenvalue <= lambda_max) out.push_back(e);
  }
  std::sort(out.begin(), out.end(), mode_less);
  return out;
}

namespace {

// One factor t(k s) or its derivative, tabulated on the rule nodes.
std::vector<double> axis_table(const quad::Rule1D& rule, Trig t, int k, bool differentiate,
                               double& factor) {
  Trig kind = t;
  factor = 1.0;
  if (differentiate) std::tie(kind, factor) = derivative(t, k);
  std::vector<double> values(rule.nodes.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = trig(kind, k * rule.nodes[i]);
  return values;
}

void require_nodes(const Mode& mode_i, const Mode& mode_j, const QuadSpec& spec) {
  validate(spec);
  const int k = std::max(max_wavenumber(mode_i), max_wavenumber(mode_j));
  if (spec.nodes_per_axis < 2 * k + 2)
    throw PreconditionError("nodes_per_axis must be >= 2*(largest wavenumber)+2 to avoid aliasing");
}

// Tensor-product rule applied to sum_c d^{deriv} phi_i,c . d^{deriv} phi_j,c with
// deriv = -1 (no derivative) or the axis being differentiated.
double separable_pairing(const SeparableField& fi, const SeparableField& fj,
                         const quad::Rule1D& rule, int deriv_axis) {
  double total = 0.0;
  for (int c = 0; c < 3; ++c) {
    const SeparableTerm& ti = fi.component[c];
    const SeparableTerm& tj = fj.component[c];
    if (ti.amp == 0.0 || tj.amp == 0.0) continue;
    double product = ti.amp * tj.amp;
    for (int a = 0; a < 3; ++a) {
      double ci = 1.0, cj = 1.0;
      const auto gi = axis_table(rule, ti.trig[a], fi.wavenumber[a], a == deriv_axis, ci);
      const auto gj = axis_table(rule, tj.trig[a], fj.wavenumber[a], a == deriv_axis, cj);
      product *= ci * cj * kernels::weighted_dot(rule.weights, gi, gj);
      if (product == 0.0) break;
    }
    total += product;
  }
  return total;
}

}  // namespace

double inner_product(const Mode& mode_i, const Mode& mode_j, const QuadSpec& spec) {
  require_nodes(mode_i, mode_j, spec);
  const auto rule = quad::make_rule(spec.scheme, 0.0, kPi, spec.nodes_per_axis);
  return separable_pairing(separable_form(mode_i), separable_form(mode_j), rule, -1);
}

double gradient_inner_product(const Mode& mode_i, const Mode& mode_j, const QuadSpec& spec) {
  require_nodes(mode_i, mode_j, spec);
  const auto rule = quad::make_rule(spec.scheme, 0.0, kPi, spec.nodes_per_axis);
  const auto fi = separable_form(mode_i);
  const auto fj = separable_form(mode_j);
  double total = 0.0;
  for (int a = 0; a < 3; ++a) total += separable_pairing(fi, fj, rule, a);
  return total;
}

std::vector<double> gram_matrix(const std::vector<Mode>& modes, const QuadSpec& spec) {
  const std::size_t n = modes.size();
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double v = inner_product(modes[i], modes[j], spec);
      g[i * n + j] = v;
      g[j * n + i] = v;
    }
  }
  return g;
}

double factorization_residual(const Mode& mode, const Point3& point) {
  validate(mode);
  const FieldValue lhs = evaluate(mode, point);
  FieldValue rhs{};
  const double m = mode.m, n = mode.n, p = mode.p;
  switch (mode.family) {
    case Family::V: {
      const FieldValue x0 = evaluate(Mode::x0(mode.n, mode.p), point);
      const double factor = std::numbers::sqrt2 * std::cos(m * point.x);
      for (int c = 0; c < 3; ++c) rhs[c] = factor * x0[c];
      break;
    }
    case Family::W: {
      const double scale = std::sqrt((m * m + n * n + p * p) * (n * n + p * p));
      const double cz = n * std::numbers::sqrt2 * std::sqrt(m * m + n * n) / scale *
                        std::cos(p * point.z);
      const double cy = p * std::numbers::sqrt2 * std::sqrt(m * m + p * p) / scale *
                        std::cos(n * point.y);
      const FieldValue z0 = evaluate(Mode::z0(mode.m, mode.n), point);
      const FieldValue y0 = evaluate(Mode::y0(mode.m, mode.p), point);
      for (int c = 0; c < 3; ++c) rhs[c] = cz * z0[c] - cy * y0[c];
      break;
    }
    default:
      throw DomainError("factorization identities exist only for the V and W families");
  }
  double r = 0.0;
  for (int c = 0; c < 3; ++c) r = std::max(r, std::abs(lhs[c] - rhs[c]));
  return r;
}

}  // namespace stokes
