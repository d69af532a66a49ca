#include "stokes/cli/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "stokes/eigenbasis.hpp"
#include "stokes/gamma_opt.hpp"
#include "stokes/integrals.hpp"
#include "stokes/sampling.hpp"
#include "stokes/supnorms.hpp"

namespace stokes::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sq(double v) { return v * v; }

std::string two_digits(int i) { return (i < 10 ? "0" : "") + std::to_string(i); }

class Collector {
 public:
  Collector(std::string prefix, bool timings) : prefix_(std::move(prefix)), timings_(timings) {}

  void add(const std::string& id, const std::function<CheckResult()>& check) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = CheckResult{{}, Status::Fail, kNaN, kNaN, kNaN, 0.0, std::string("error: ") + e.what()};
    }
    r.check_id = prefix_ + "." + id;
    if (timings_) {
      r.elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() {
    std::stable_sort(results_.begin(), results_.end(),
                     [](const CheckResult& x, const CheckResult& y) { return x.check_id < y.check_id; });
    return std::move(results_);
  }

 private:
  std::string prefix_;
  bool timings_;
  std::vector<CheckResult> results_;
};

std::vector<Mode> modes_of(Family f, int cutoff) {
  std::vector<Mode> out;
  for (const ModeEntry& e : family_modes(f, cutoff)) out.push_back(e.mode);
  return out;
}

int small_index(const SuiteConfig& c) { return std::min(c.max_index, 3); }

GridSpec grid_for(Family f, const SuiteConfig& c) {
  return {f == Family::W ? c.grid_3d : c.grid_2d, true};
}

// ---------------------------------------------------------------- basis

void basis_suite(Collector& out, const SuiteConfig& cfg) {
  for (const auto& [lambda, expected] : {std::pair{2, 3}, std::pair{3, 5}, std::pair{5, 11}}) {
    out.add("enum.count_lambda" + std::to_string(lambda), [lambda = lambda, expected = expected] {
      return make_check({}, CheckKind::Equality,
                        static_cast<double>(enumerate_modes(lambda).size()), expected, 0.0);
    });
  }

  out.add("gram.lambda20", [] {
    std::vector<Mode> modes;
    for (const ModeEntry& e : enumerate_modes(20)) modes.push_back(e.mode);
    const std::vector<double> g = gram_matrix(modes, QuadSpec{});
    const std::size_t n = modes.size();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(g[i * n + j] - (i == j ? 1.0 : 0.0)));
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-9,
                      std::to_string(n) + " modes, max |G - I|");
  });

  out.add("gradient_gram.lambda20", [] {
    std::vector<ModeEntry> entries = enumerate_modes(20);
    double worst = 0.0;
    for (const ModeEntry& ei : entries) {
      for (const ModeEntry& ej : entries) {
        const double v = gradient_inner_product(ei.mode, ej.mode, QuadSpec{});
        const double expected = ei.mode == ej.mode ? ei.eigenvalue : 0.0;
        worst = std::max(worst, std::abs(v - expected));
      }
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-9, "max |grad Gram - diag(lambda)|");
  });

  const int k = small_index(cfg);
  std::vector<Point3> points;
  {
    Sampler s(cfg.seed, "basis.points");
    for (int i = 0; i < 100; ++i) points.push_back(s.interior_point(0.01));
  }

  for (Family f : kAllFamilies) {
    const std::string fam = to_string(f);
    const std::vector<Mode> modes = modes_of(f, k);

    out.add(fam + ".divergence", [&, modes] {
      double worst = 0.0;
      for (const Mode& m : modes)
        for (const Point3& x : points) worst = std::max(worst, std::abs(divergence(m, x)));
      return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-12, "max |div phi|");
    });

    out.add(fam + ".fd", [&, modes] {
      double eig = 0.0, div = 0.0;
      for (const Mode& m : modes) {
        for (const Point3& x : points) {
          const FdResidual r = fd_residual(m, x, QuadSpec{16, QuadScheme::UniformTrapezoid, 1e-4});
          eig = std::max(eig, r.eigen_residual);
          div = std::max(div, r.div_residual);
        }
      }
      return make_check({}, CheckKind::AtMost, eig, 0.0, 1e-4,
                        "max eigen residual at h=1e-4; max fd divergence " + format_real(div));
    });

    out.add(fam + ".boundary", [&, modes] {
      // Normal component and normal derivative of the tangential components
      // vanish on every face.
      Sampler s(cfg.seed, "basis.faces");
      double worst = 0.0;
      for (int i = 0; i < 100; ++i) {
        const Point3 p = s.interior_point(0.0);
        for (int axis = 0; axis < 3; ++axis) {
          for (double face : {0.0, kPi}) {
            Point3 q = p;
            (axis == 0 ? q.x : axis == 1 ? q.y : q.z) = face;
            for (const Mode& m : modes) {
              const FieldValue v = evaluate(m, q);
              const auto jac = jacobian(m, q);
              worst = std::max(worst, std::abs(v[axis]));
              for (int t = 0; t < 3; ++t)
                if (t != axis) worst = std::max(worst, std::abs(jac[t][axis]));
            }
          }
        }
      }
      return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-12,
                        "max |phi_n| and |d_n phi_t| on the faces");
    });

    if (f == Family::V || f == Family::W) {
      out.add("factorization." + fam, [&, modes] {
        double worst = 0.0;
        for (const Mode& m : modes)
          for (const Point3& x : points) worst = std::max(worst, factorization_residual(m, x));
        return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-12);
      });
    }
  }
}

// ---------------------------------------------------------------- supnorms

std::vector<Direction> sample_directions(std::uint64_t seed, const char* stream, int count) {
  Sampler s(seed, stream);
  std::vector<Direction> out;
  for (int i = 0; i < count; ++i) out.push_back(s.direction());
  return out;
}

void supnorms_suite(Collector& out, const SuiteConfig& cfg) {
  for (Family f : kAllFamilies) {
    const std::string fam = to_string(f);
    // One oracle pass per family feeds three records.
    struct NormStats {
      double rel = 0.0;
      double excess = -std::numeric_limits<double>::infinity();
      double gap_slack = -std::numeric_limits<double>::infinity();
    };
    auto stats = std::make_shared<std::optional<NormStats>>();
    const auto compute = [&cfg, f, stats]() -> const NormStats& {
      if (!*stats) {
        NormStats st;
        const GridSpec grid = grid_for(f, cfg);
        for (const Mode& m : modes_of(f, cfg.max_index)) {
          const double formula = sup_norm_sq(m);
          const double oracle = grid_sup_sq_oracle(m, std::nullopt, grid).value;
          st.rel = std::max(st.rel, std::abs(oracle - formula) / formula);
          st.excess = std::max(st.excess, oracle - formula);
          st.gap_slack =
              std::max(st.gap_slack, formula - oracle - oracle_gap_bound(m, std::nullopt, grid));
        }
        *stats = st;
      }
      return **stats;
    };
    out.add(fam + ".norm.rel_dev", [compute] {
      return make_check({}, CheckKind::AtMost, compute().rel, 0.0, 0.01,
                        "max |oracle - formula| / formula");
    });
    out.add(fam + ".norm.excess", [compute] {
      return make_check({}, CheckKind::AtMost, compute().excess, 0.0, 1e-10,
                        "max (oracle - formula)");
    });
    out.add(fam + ".norm.within_gap", [compute] {
      return make_check({}, CheckKind::AtMost, compute().gap_slack, 0.0, 0.0,
                        "max (formula - oracle - Lipschitz gap bound)");
    });
  }

  const int k = small_index(cfg);
  const std::vector<Direction> dirs = sample_directions(cfg.seed, "supnorms.directions", 20);
  for (Family f : {Family::X0, Family::Y0, Family::Z0, Family::V}) {
    const std::string fam = to_string(f);
    auto excess = std::make_shared<double>(kNaN);
    out.add(fam + ".dir.rel_dev", [&cfg, &dirs, f, k, excess] {
      double rel = 0.0, ex = -std::numeric_limits<double>::infinity();
      const GridSpec grid = grid_for(f, cfg);
      for (const Mode& m : modes_of(f, k)) {
        for (const Direction& e : dirs) {
          const double formula = dir_sup_norm_sq(m, e);
          const double oracle = grid_sup_sq_oracle(m, e, grid).value;
          rel = std::max(rel, std::abs(oracle - formula) / formula);
          ex = std::max(ex, oracle - formula);
        }
      }
      *excess = ex;
      return make_check({}, CheckKind::AtMost, rel, 0.0, 0.01,
                        std::to_string(dirs.size()) + " directions, indices <= " + std::to_string(k));
    });
    out.add(fam + ".dir.excess", [excess] {
      if (std::isnan(*excess)) throw std::runtime_error("directional sweep did not run");
      return make_check({}, CheckKind::AtMost, *excess, 0.0, 1e-10, "max (oracle - formula)");
    });
  }

  const Direction e_adj{1.0 / 3.0, -2.0 / 3.0, -2.0 / 3.0};
  out.add("W.dir.adjudication", [&cfg, e_adj] {
    const Mode m = Mode::w(1, 1, 1);
    const double formula = dir_sup_norm_sq(m, e_adj);
    const double oracle = grid_sup_sq_oracle(m, e_adj, GridSpec{cfg.grid_3d, true}).value;
    std::string note = "e=(1/3,-2/3,-2/3), W(1,1,1); oracle/formula " + format_real(oracle / formula);
    if (const auto crit = interior_critical_sq(projection_coeffs(m, e_adj)))
      note += "; interior critical value " + format_real(*crit * w_normalisation_sq(m));
    return make_check({}, CheckKind::Report, oracle, formula, 0.0, note);
  });

  out.add("W.dir.sweep", [&cfg, e_adj, k] {
    std::vector<Direction> sweep{e_adj};
    for (const Direction& e : sample_directions(cfg.seed, "supnorms.w_sweep", 49)) sweep.push_back(e);
    const GridSpec grid{std::min(cfg.grid_3d, 60), true};
    double worst = 0.0, least = std::numeric_limits<double>::infinity();
    int above = 0, total = 0;
    for (const Mode& m : modes_of(Family::W, k)) {
      for (const Direction& e : sweep) {
        const double formula = dir_sup_norm_sq(m, e);
        const double oracle = grid_sup_sq_oracle(m, e, grid).value;
        const double ratio = oracle / formula;
        worst = std::max(worst, ratio);
        least = std::min(least, ratio);
        if (oracle > formula + 1e-10) ++above;
        ++total;
      }
    }
    return make_check({}, CheckKind::Report, worst, 1.0, 0.0,
                      "max oracle/formula over " + std::to_string(total) + " (mode, direction) pairs; " +
                          std::to_string(above) + " exceed the formula; min ratio " +
                          format_real(least));
  });

  out.add("W.dir.axes", [&cfg, k] {
    double rel = 0.0;
    for (const Mode& m : modes_of(Family::W, k)) {
      for (const Direction& e : {Direction{1, 0, 0}, Direction{0, 1, 0}, Direction{0, 0, 1}}) {
        const double formula = dir_sup_norm_sq(m, e);
        const double oracle = grid_sup_sq_oracle(m, e, GridSpec{cfg.grid_3d, true}).value;
        rel = std::max(rel, std::abs(oracle - formula) / formula);
      }
    }
    return make_check({}, CheckKind::AtMost, rel, 0.0, 0.005, "coordinate directions");
  });

  out.add("case22.alpha1_beta1", [] {
    return make_check({}, CheckKind::Equality, case22_value(1.0, 1.0).D, 4.0 / 3.0, 1e-15);
  });

  out.add("case22.W111_critical", [&cfg, e_adj] {
    const Mode m = Mode::w(1, 1, 1);
    const auto crit = interior_critical_sq(projection_coeffs(m, e_adj));
    if (!crit) throw std::runtime_error("no interior critical point");
    const double value = *crit * w_normalisation_sq(m);
    const double oracle = grid_sup_sq_oracle(m, e_adj, GridSpec{cfg.grid_3d, true}).value;
    return make_check({}, CheckKind::Equality, oracle, value, 1e-3 * value,
                      "grid oracle vs interior critical value");
  });

  out.add("corner.bilinear", [&cfg] {
    double worst = 0.0;
    for (int n = 1; n <= cfg.max_index; ++n)
      for (int p = 1; p <= cfg.max_index; ++p)
        worst = std::max(worst, std::abs(bilinear_corner_max(n, p) - std::max(n * n, p * p)));
    return make_check({}, CheckKind::Equality, worst, 0.0, 0.0);
  });

  out.add("corner.trilinear", [&cfg] {
    double worst = 0.0;
    for (int m = 1; m <= cfg.max_index; ++m)
      for (int n = 1; n <= cfg.max_index; ++n)
        for (int p = 1; p <= cfg.max_index; ++p) {
          const double expected = std::max({sq(n * n + p * p), sq(m * n), sq(m * p)});
          worst = std::max(worst, std::abs(trilinear_corner_max(m, n, p) - expected));
        }
    return make_check({}, CheckKind::Equality, worst, 0.0, 0.0);
  });

  out.add("axis_reduction", [&cfg] {
    // The largest coordinate-direction norm is the full sup norm.
    double worst = 0.0;
    for (Family f : kAllFamilies) {
      for (const Mode& m : modes_of(f, cfg.max_index)) {
        double best = 0.0;
        for (const Direction& e : {Direction{1, 0, 0}, Direction{0, 1, 0}, Direction{0, 0, 1}})
          best = std::max(best, dir_sup_norm_sq(m, e));
        const double full = sup_norm_sq(m);
        worst = std::max(worst, std::abs(best - full) / full);
      }
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-15);
  });
}

// ---------------------------------------------------------------- integrals

double exact_counterpart(const IntegralQuery& q) {
  const double j = angular_integral_exact(q.b, q.c);
  switch (q.kind) {
    case IntegralKind::Angular: return j;
    case IntegralKind::I1: return j / (4.0 * q.mu);
    case IntegralKind::I2: return kPi * j / (8.0 * std::sqrt(q.mu));
    case IntegralKind::I3: return kPi / (12.0 * std::sqrt(q.mu)) * (kPi * q.a * q.a + j / 2.0);
  }
  return kNaN;
}

std::vector<IntegralQuery> integral_samples(IntegralKind kind, std::uint64_t seed) {
  std::vector<IntegralQuery> out;
  const double r = std::sqrt(0.5);
  out.push_back(kind == IntegralKind::I3 ? IntegralQuery{kind, 1.0, 0.0, 0.0, 1.0}
                                         : IntegralQuery{kind, 0.0, r, r, 1.0});
  Sampler s(seed, std::string("integrals.") + to_string(kind));
  for (int i = 1; i < 20; ++i) {
    const Direction e = s.direction();
    const double mu = std::pow(10.0, s.uniform(-1.0, 1.0));
    out.push_back(kind == IntegralKind::I3 ? IntegralQuery{kind, e.a, e.b, e.c, mu}
                                           : IntegralQuery{kind, 0.0, e.b, e.c, mu});
  }
  return out;
}

void integrals_suite(Collector& out, const SuiteConfig& cfg) {
  for (IntegralKind kind : {IntegralKind::Angular, IntegralKind::I1, IntegralKind::I2, IntegralKind::I3}) {
    const std::vector<IntegralQuery> samples = integral_samples(kind, cfg.seed);
    const double rel = kind == IntegralKind::Angular ? 1e-10
                       : kind == IntegralKind::I1    ? 1e-7
                                                     : 1e-5;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const IntegralQuery q = samples[i];
      out.add(std::string(to_string(kind)) + ".sample" + two_digits(static_cast<int>(i)),
              [q, rel, &cfg] {
                const double closed = closed_integral(q);
                const double exact = exact_counterpart(q);
                const double quad = quad_integral(q, cfg.quad_tol * std::max(closed, exact));
                std::string note = "a=" + format_real(q.a) + " b=" + format_real(q.b) +
                                   " c=" + format_real(q.c) + " mu=" + format_real(q.mu) +
                                   "; exact angular form gives " + format_real(exact);
                if (q.kind == IntegralKind::I3)
                  return make_check({}, CheckKind::AtMost, quad, closed, 0.0, note);
                note += " (rel dev " + format_real(std::abs(quad - exact) / exact) + ")";
                return make_check({}, CheckKind::Equality, quad, closed, rel * closed, note);
              });
    }
  }

  out.add("upsilon.symmetry", [&cfg] {
    Sampler s(cfg.seed, "integrals.upsilon");
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double b = s.uniform(-1.0, 1.0), c = s.uniform(-1.0, 1.0);
      worst = std::max({worst, std::abs(upsilon(b, c) - upsilon(c, b)),
                        std::abs(upsilon(b, c) - upsilon(-b, c))});
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 0.0);
  });

  out.add("upsilon.diagonal", [&cfg] {
    Sampler s(cfg.seed, "integrals.upsilon_diag");
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = s.uniform(0.0, 1.0);
      worst = std::max(worst, std::abs(upsilon(t, t) - t * t * (kPi / 2 + 1.0)));
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-15, "Upsilon(t,t) = t^2 (pi/2 + 1)");
  });

  out.add("upsilon.example", [] {
    return make_check({}, CheckKind::Equality, upsilon(0.6, 0.8), 1.2256669881, 1e-9);
  });
}

// ---------------------------------------------------------------- sums

void sums_suite(Collector& out, const SuiteConfig& cfg) {
  constexpr int kCutoff = 40;
  struct Sample {
    Point3 x;
    Direction e;
  };
  std::vector<Sample> samples;
  {
    Sampler s(cfg.seed, "sums.samples");
    for (int i = 0; i < 10; ++i) {
      const Point3 x = s.interior_point(0.0);
      samples.push_back({x, s.direction()});
    }
  }

  for (Family f : kAllFamilies) {
    for (double mu : {0.5, 1.0, 2.0, 5.0}) {
      out.add(std::string(to_string(f)) + ".mu" + format_real(mu), [f, mu, samples] {
        double worst = -std::numeric_limits<double>::infinity();
        double worst_exact = worst;
        for (const Sample& s : samples) {
          const double partial = family_sum_partial({f, s.e, s.x, mu, kCutoff});
          const double bound = family_sum_bound(f, s.e, mu);
          worst = std::max(worst, partial - bound);
          // Same bound with the exact angular integral in place of Upsilon.
          const auto j = [](double b, double c) { return angular_integral_exact(b, c); };
          const double pi3 = kPi * kPi * kPi, pi2 = kPi * kPi;
          double exact = 0.0;
          switch (f) {
            case Family::X0: exact = j(s.e.b, s.e.c) / (pi3 * mu); break;
            case Family::Y0: exact = j(s.e.a, s.e.c) / (pi3 * mu); break;
            case Family::Z0: exact = j(s.e.a, s.e.b) / (pi3 * mu); break;
            case Family::V: exact = j(s.e.b, s.e.c) / (pi2 * std::sqrt(mu)); break;
            case Family::W:
              exact = 2.0 / (3.0 * pi2 * std::sqrt(mu)) * (kPi * sq(s.e.a) + j(s.e.b, s.e.c) / 2.0);
              break;
          }
          worst_exact = std::max(worst_exact, partial - exact);
        }
        return make_check({}, CheckKind::AtMost, worst, 0.0, 0.0,
                          "max (partial - bound), cutoff 40; with the exact angular form " +
                              format_real(worst_exact));
      });
    }
  }

  out.add("monotone", [samples] {
    double worst = -std::numeric_limits<double>::infinity();
    for (Family f : kAllFamilies)
      for (const Sample& s : samples)
        worst = std::max(worst, family_sum_partial({f, s.e, s.x, 1.0, 20}) -
                                    family_sum_partial({f, s.e, s.x, 1.0, kCutoff}));
    return make_check({}, CheckKind::AtMost, worst, 0.0, 0.0, "partial(20) - partial(40)");
  });

  out.add("combination", [&cfg] {
    const std::vector<Direction> dirs = sample_directions(cfg.seed, "sums.combination", 100);
    double worst = 0.0;
    for (const Direction& e : dirs) {
      double total = 0.0;
      for (Family f : kAllFamilies) total += family_sum_bound(f, e, 2.0);
      worst = std::max(worst, std::abs(total - combined_sum_bound(e)));
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-12,
                      "max |sum of family bounds at mu=2 - Gamma/(2 pi^3)|");
  });
}

// ---------------------------------------------------------------- gamma

void gamma_suite(Collector& out, const SuiteConfig& cfg) {
  out.add("max_closed", [] {
    return make_check({}, CheckKind::Equality, gamma_max_closed(), 10.91, 0.01);
  });
  out.add("sigma", [] { return make_check({}, CheckKind::Equality, find_sigma(), 0.672, 0.002); });
  out.add("G_sigma", [] {
    return make_check({}, CheckKind::Equality, g_profile(find_sigma()).G, 0.435, 0.002);
  });
  out.add("sign_scan", [] {
    return make_check({}, CheckKind::Equality, count_gprime_sign_changes(0.0, 10.0, 1e-3), 1.0, 0.0,
                      "sign changes of G' on [0,10], step 1e-3");
  });

  auto oracle = std::make_shared<std::optional<SphereMax>>();
  const auto get_oracle = [oracle]() -> const SphereMax& {
    if (!*oracle) *oracle = gamma_max_oracle(SphereSearchSpec{});
    return **oracle;
  };
  out.add("max_oracle", [get_oracle] {
    return make_check({}, CheckKind::Equality, get_oracle().value, gamma_max_closed(), 5e-3,
                      "spherical grid search");
  });
  out.add("argmax_bc", [get_oracle] {
    const SphereMax& s = get_oracle();
    return make_check({}, CheckKind::Equality, s.b, s.c, 1e-3);
  });
  out.add("argmax_a", [get_oracle] {
    return make_check({}, CheckKind::Equality, get_oracle().a, a_of_s(find_sigma()), 1e-3);
  });

  out.add("lambda_identity", [] {
    const double shift = kPi / 2 + gamma_constants().k2;
    double worst = 0.0;
    for (int i = 1; i <= 500; ++i) {
      const double a = i / 500.0;
      worst = std::max(worst, std::abs(gamma_restricted(a) - (g_profile(s_of_a(a)).G + shift)));
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-12, "500 points a in (0,1]");
  });

  out.add("upsilon_b_fd", [&cfg] {
    Sampler s(cfg.seed, "gamma.upsilon_fd");
    constexpr double h = 1e-6;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double b = s.uniform(0.05, 1.0), c = s.uniform(0.05, 1.0);
      const double fd = (upsilon(b + h, c) - upsilon(b - h, c)) / (2 * h);
      worst = std::max(worst, std::abs(fd - upsilon_db(b, c)));
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-6);
  });

  out.add("gprime_fd", [&cfg] {
    Sampler s(cfg.seed, "gamma.gprime_fd");
    constexpr double h = 1e-6;
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = s.uniform(0.01, 5.0);
      const double fd = (g_profile(x + h).G - g_profile(x - h).G) / (2 * h);
      worst = std::max(worst, std::abs(fd - g_profile(x).Gprime));
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-6);
  });

  out.add("gprime_display", [] {
    double worst = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double x = i / 100.0;
      worst = std::max(worst, std::abs(4.0 * g_prime_display(x) - g_profile(x).Gprime));
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 1e-12,
                      "displayed derivative is a quarter of dG/ds");
  });

  out.add("octant_symmetry", [&cfg] {
    const std::vector<Direction> dirs = sample_directions(cfg.seed, "gamma.octant", 100);
    double worst = 0.0;
    for (const Direction& e : dirs) {
      const double base = gamma(std::abs(e.a), std::abs(e.b), std::abs(e.c));
      worst = std::max(worst, std::abs(gamma(e.a, e.b, e.c) - base));
    }
    return make_check({}, CheckKind::AtMost, worst, 0.0, 0.0);
  });
}

}  // namespace

std::vector<CheckResult> run_one(SuiteName suite, const SuiteConfig& config) {
  Collector out(to_string(suite), config.timings);
  switch (suite) {
    case SuiteName::Basis: basis_suite(out, config); break;
    case SuiteName::Supnorms: supnorms_suite(out, config); break;
    case SuiteName::Integrals: integrals_suite(out, config); break;
    case SuiteName::Sums: sums_suite(out, config); break;
    case SuiteName::Gamma: gamma_suite(out, config); break;
  }
  return out.take();
}

Report run_suite(const SuiteConfig& config) {
  Report report{config, {}};
  for (SuiteName s : kAllSuites) {
    if (std::find(config.suites.begin(), config.suites.end(), s) == config.suites.end()) continue;
    for (CheckResult& r : run_one(s, config)) report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace stokes::cli
