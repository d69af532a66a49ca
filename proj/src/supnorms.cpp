#include "stokes/supnorms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "stokes/errors.hpp"
#include "stokes/kernels.hpp"

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;
const double kPi3 = kPi * kPi * kPi;

double sq(double v) { return v * v; }

double trig(Trig t, double arg) { return t == Trig::Sin ? std::sin(arg) : std::cos(arg); }

}  // namespace

Direction Direction::normalized(double a, double b, double c) {
  const double norm = std::sqrt(a * a + b * b + c * c);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("cannot normalise a zero direction");
  return {a / norm, b / norm, c / norm};
}

void validate(const Direction& e) {
  if (!(std::abs(e.a * e.a + e.b * e.b + e.c * e.c - 1.0) <= 1e-12))
    throw DomainError("direction must be a unit vector");
}

ProjectionCoeffs projection_coeffs(const Mode& w_mode, const Direction& e) {
  validate(w_mode);
  if (w_mode.family != Family::W) throw DomainError("projection coefficients are defined for W modes");
  const double m = w_mode.m, n = w_mode.n, p = w_mode.p;
  return {e.a * (n * n + p * p), -e.b * m * n, -e.c * m * p};
}

void validate(const GridSpec& grid) {
  if (grid.points_per_axis < 8) throw PreconditionError("grid needs at least 8 points per axis");
}

double sup_norm_sq(const Mode& mode) {
  validate(mode);
  const double m2 = sq(mode.m), n2 = sq(mode.n), p2 = sq(mode.p);
  switch (mode.family) {
    case Family::X0: return 4.0 * std::max(n2, p2) / (kPi3 * (n2 + p2));
    case Family::Y0: return 4.0 * std::max(m2, p2) / (kPi3 * (m2 + p2));
    case Family::Z0: return 4.0 * std::max(m2, n2) / (kPi3 * (m2 + n2));
    case Family::V: return 8.0 * std::max(n2, p2) / (kPi3 * (n2 + p2));
    case Family::W:
      return 8.0 * std::max({sq(n2 + p2), m2 * n2, m2 * p2}) /
             (kPi3 * (n2 + p2) * (m2 + n2 + p2));
  }
  return 0.0;
}

double dir_sup_norm_sq_raw(const Mode& mode, double a, double b, double c) {
  validate(mode);
  const double m2 = sq(mode.m), n2 = sq(mode.n), p2 = sq(mode.p);
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  switch (mode.family) {
    case Family::X0: return 4.0 * std::max(b2 * p2, c2 * n2) / (kPi3 * (n2 + p2));
    case Family::Y0: return 4.0 * std::max(a2 * p2, c2 * m2) / (kPi3 * (m2 + p2));
    case Family::Z0: return 4.0 * std::max(a2 * n2, b2 * m2) / (kPi3 * (m2 + n2));
    case Family::V: return 8.0 * std::max(b2 * p2, c2 * n2) / (kPi3 * (n2 + p2));
    case Family::W:
      return 8.0 * std::max({a2 * sq(n2 + p2), b2 * m2 * n2, c2 * m2 * p2}) /
             (kPi3 * (n2 + p2) * (m2 + n2 + p2));
  }
  return 0.0;
}

double dir_sup_norm_sq(const Mode& mode, const Direction& e) {
  validate(e);
  return dir_sup_norm_sq_raw(mode, e.a, e.b, e.c);
}

namespace {

struct ScanResult {
  double value = -1.0;
  std::array<std::size_t, 3> index{};
};

// Tabulated separable field on a tensor grid.
class GridScanner {
 public:
  GridScanner(const SeparableField& field, const std::optional<Direction>& e)
      : field_(field), projected_(e.has_value()) {
    for (int c = 0; c < 3; ++c) {
      weight_[c] = field.component[c].amp * (e ? (*e)[c] : 1.0);
    }
  }

  ScanResult scan(const std::array<std::vector<double>, 3>& nodes) const {
    std::array<std::array<std::vector<double>, 3>, 3> table;  // [component][axis]
    for (int c = 0; c < 3; ++c) {
      for (int a = 0; a < 3; ++a) {
        auto& t = table[c][a];
        t.resize(nodes[a].size());
        for (std::size_t i = 0; i < t.size(); ++i)
          t[i] = trig(field_.component[c].trig[a], field_.wavenumber[a] * nodes[a][i]);
      }
    }
    const std::size_t nz = nodes[2].size();
    std::vector<double> row(nz);
    ScanResult best;
    for (std::size_t i = 0; i < nodes[0].size(); ++i) {
      for (std::size_t j = 0; j < nodes[1].size(); ++j) {
        kernels::RowInputs in{table[0][2], table[1][2], table[2][2],
                              weight_[0] * table[0][0][i] * table[0][1][j],
                              weight_[1] * table[1][0][i] * table[1][1][j],
                              weight_[2] * table[2][0][i] * table[2][1][j]};
        if (projected_)
          kernels::projection_sq_row(in, row);
        else
          kernels::norm_sq_row(in, row);
        const auto r = kernels::row_argmax(row);
        if (r.value > best.value) best = {r.value, {i, j, r.index}};
      }
    }
    return best;
  }

 private:
  SeparableField field_;
  bool projected_;
  std::array<double, 3> weight_{};
};

std::vector<double> uniform_nodes(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) out[i] = lo + (hi - lo) * i / (count - 1);
  out.back() = hi;
  return out;
}

std::array<bool, 3> active_axes(const Mode& mode, const SeparableField& f) {
  std::array<bool, 3> active{};
  for (int a = 0; a < 3; ++a) active[a] = f.wavenumber[a] > 0;
  if (mode.family == Family::V) active[0] = false;
  return active;
}

}  // namespace

GridMax grid_sup_sq_oracle(const Mode& mode, const std::optional<Direction>& e,
                           const GridSpec& grid) {
  validate(grid);
  if (e) validate(*e);
  const SeparableField field = separable_form(mode);
  const auto active = active_axes(mode, field);
  const GridScanner scanner(field, e);

  std::array<std::vector<double>, 3> nodes;
  for (int a = 0; a < 3; ++a)
    nodes[a] = active[a] ? uniform_nodes(0.0, kPi, grid.points_per_axis) : std::vector<double>{0.0};

  const ScanResult coarse = scanner.scan(nodes);
  GridMax out{coarse.value,
              {nodes[0][coarse.index[0]], nodes[1][coarse.index[1]], nodes[2][coarse.index[2]]}};
  if (!grid.refine) return out;

  std::array<std::vector<double>, 3> fine;
  for (int a = 0; a < 3; ++a) {
    if (!active[a]) {
      fine[a] = {0.0};
      continue;
    }
    const std::size_t i = coarse.index[a];
    const double lo = nodes[a][i == 0 ? 0 : i - 1];
    const double hi = nodes[a][std::min(i + 1, nodes[a].size() - 1)];
    // Ten sub-cells per coarse cell.
    const int cells = static_cast<int>(std::lround((hi - lo) / (kPi / (grid.points_per_axis - 1)))) * 10;
    fine[a] = uniform_nodes(lo, hi, std::max(cells, 1) + 1);
  }
  const ScanResult refined = scanner.scan(fine);
  if (refined.value > out.value) {
    out = {refined.value,
           {fine[0][refined.index[0]], fine[1][refined.index[1]], fine[2][refined.index[2]]}};
  }
  return out;
}

double oracle_gap_bound(const Mode& mode, const std::optional<Direction>& e, const GridSpec& grid) {
  validate(grid);
  const SeparableField f = separable_form(mode);
  const double k = std::sqrt(sq(f.wavenumber[0]) + sq(f.wavenumber[1]) + sq(f.wavenumber[2]));
  double lipschitz = 0.0;
  if (e) {
    double amplitude = 0.0;
    for (int c = 0; c < 3; ++c) amplitude += std::abs(f.component[c].amp * (*e)[c]);
    lipschitz = 2.0 * amplitude * amplitude * k;
  } else {
    for (int c = 0; c < 3; ++c) lipschitz += 2.0 * sq(f.component[c].amp) * k;
  }
  return lipschitz * kPi / grid.points_per_axis;
}

double bilinear_corner_max(int n, int p) {
  const auto gamma = [&](double y, double z) {
    return sq(p) * y * (1.0 - z) + sq(n) * (1.0 - y) * z;
  };
  double best = 0.0;
  for (double y : {0.0, 1.0})
    for (double z : {0.0, 1.0}) best = std::max(best, gamma(y, z));
  return best;
}

double trilinear_corner_max(int m, int n, int p) {
  const double m2 = sq(m), n2 = sq(n), p2 = sq(p);
  const auto gamma = [&](double x, double y, double z) {
    return sq(n2 + p2) * x * (1 - y) * (1 - z) + m2 * n2 * (1 - x) * y * (1 - z) +
           m2 * p2 * (1 - x) * (1 - y) * z;
  };
  double best = 0.0;
  for (double x : {0.0, 1.0})
    for (double y : {0.0, 1.0})
      for (double z : {0.0, 1.0}) best = std::max(best, gamma(x, y, z));
  return best;
}

Case22 case22_value(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha <= 1.0 && beta > 0.0 && beta <= 1.0))
    throw DomainError("case 2.2 requires (alpha, beta) in (0,1]^2");
  if (alpha + beta < 1.0 - 1e-15) throw DomainError("case 2.2 requires alpha + beta >= 1");
  const double denom = 2.0 * (alpha * beta + alpha + beta) - alpha * alpha - beta * beta - 1.0;
  if (!(denom > 0.0)) throw DomainError("case 2.2 denominator is not positive");
  Case22 r;
  r.D = 4.0 * alpha * beta / denom;
  r.cos_sq = {2.0 * alpha * (beta + 1.0 - alpha) / denom, 2.0 * beta * (alpha + 1.0 - beta) / denom,
              2.0 * (alpha + beta - 1.0) / denom};
  r.feasible = std::all_of(r.cos_sq.begin(), r.cos_sq.end(),
                           [](double v) { return v >= 0.0 && v <= 1.0; });
  return r;
}

std::optional<double> interior_critical_sq(const ProjectionCoeffs& k) {
  std::array<double, 3> s{sq(k.A), sq(k.B), sq(k.C)};
  if (s[0] == 0.0 || s[1] == 0.0 || s[2] == 0.0) return std::nullopt;
  std::sort(s.begin(), s.end());
  const double alpha = s[0] / s[2];
  const double beta = s[1] / s[2];
  if (!(alpha + beta > 1.0)) return std::nullopt;
  const Case22 c = case22_value(alpha, beta);
  if (!c.feasible) return std::nullopt;
  return s[2] * c.D;
}

double w_normalisation_sq(const Mode& w_mode) {
  validate(w_mode);
  const double m2 = sq(w_mode.m), n2 = sq(w_mode.n), p2 = sq(w_mode.p);
  return 8.0 / (kPi3 * (n2 + p2) * (m2 + n2 + p2));
}

}  // namespace stokes
